#include "app.hpp"

#include <iostream>

int main(int argc, char** argv) { return glkm::cli::main_entry(argc, argv, std::cout, std::cerr); }
