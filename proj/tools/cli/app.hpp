#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glkm::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<std::string> command;  // e.g. {"verify", "braid"}
    std::optional<std::size_t> n, k, m;
    std::optional<std::size_t> sites, p, order;
    std::optional<std::size_t> sites2, p2;
    long alpha = 1;
    std::vector<std::string> lambdas;
    std::string suite = "all";
    std::string solution = "deformed";
    std::string family = "both";
    std::string format = "text";
    std::string output;
    std::string dot_dir;
    std::string convention = "default";
    std::size_t samples = 20;
    unsigned seed = 1;
    bool no_timing = false;
};

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

// Returns the parsed config, or an exit code when parsing already finished
// the run (help output or a usage error, reported on `err`).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code);

// Dispatches a validated config; the report goes to `out` unless an output
// path is set. Usage errors found here are raised as UsageError.
int run(const RunConfig& cfg, std::ostream& out);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glkm::cli
