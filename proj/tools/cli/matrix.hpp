#pragma once

#include "glkm/report/check_report.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace glkm::cli {

// One acceptance criterion: a named batch of checks with a wall-clock budget.
struct Criterion {
    std::string id;
    std::string title;
    double limit_ms;
    std::function<std::vector<CheckReport>()> run;
};

// With a golden directory the DOT graphs and tableaux are also compared
// byte-for-byte against the stored files.
std::vector<Criterion> acceptance_matrix(const std::string& golden_dir = "");

// Passes iff `inner` failed; used for negative controls.
CheckReport expect_rejected(const std::string& name, const CheckReport& inner);

// Rational sample points shared by the YBE/RTT/unitarity drivers.
std::vector<std::pair<Scalar, Scalar>> default_lambda_pairs();
std::vector<Scalar> default_lambdas();

// Deterministic rational triples for the two-dimensional gl11 modules.
std::vector<std::array<Scalar, 3>> random_hw_triples(std::size_t count, unsigned seed);

// Expected adjacency of the transition diagrams, "src -label-> dst" per line.
std::vector<std::string> expected_dot_edges(std::size_t n, std::size_t k, bool plus);
std::vector<std::string> dot_edges(const std::string& dot);

std::string ssyt_section(std::size_t sites, std::size_t p);

}  // namespace glkm::cli
