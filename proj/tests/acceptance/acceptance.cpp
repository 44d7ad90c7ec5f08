// Runs every acceptance criterion and prints one line per criterion. A
// criterion passes when all of its checks pass within its time budget.
#include "matrix.hpp"

#include <cstdio>
#include <string>

using namespace glkm;

int main(int argc, char** argv) {
    const std::string golden = argc > 1 ? argv[1] : GLKM_GOLDEN_DIR;
    bool all = true;
    for (const auto& c : cli::acceptance_matrix(golden)) {
        Stopwatch sw;
        std::vector<CheckReport> checks;
        std::string error;
        try {
            checks = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double ms = sw.elapsed_ms();
        std::size_t failed = 0;
        const CheckReport* first = nullptr;
        for (const auto& r : checks)
            if (!r.passed) {
                ++failed;
                if (!first) first = &r;
            }
        const bool in_time = ms < c.limit_ms;
        const bool ok = error.empty() && failed == 0 && in_time;
        all = all && ok;
        std::printf("%s %s (%.0f ms < %.0f ms, %zu checks) %s\n", c.id.c_str(), ok ? "PASS" : "FAIL", ms, c.limit_ms,
                    checks.size(), c.title.c_str());
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        if (!in_time) std::printf("    over the time budget\n");
        if (first) {
            std::printf("    %zu failing, first: %s\n", failed, first->name.c_str());
            for (const auto& w : first->witnesses) std::printf("      %s\n", w.label.c_str());
        }
    }
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
