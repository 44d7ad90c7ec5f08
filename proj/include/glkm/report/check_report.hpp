#pragma once

#include "glkm/linalg/scalar.hpp"
#include "glkm/linalg/sparse.hpp"

#include <chrono>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace glkm {

struct Witness {
    std::string label;
    std::vector<std::size_t> index;
    Scalar expected;
    Scalar actual;

    friend bool operator==(const Witness&, const Witness&) = default;
};

// Outcome of one named verification. A check passes iff it recorded no
// witnesses; only the first `witness_cap` are kept, the total is counted.
struct CheckReport {
    static constexpr std::size_t witness_cap = 10;

    std::string name;
    bool passed = true;
    bool applicable = true;
    bool residual_zero = true;
    std::vector<Witness> witnesses;
    std::size_t witness_count = 0;
    double duration_ms = 0;
    std::vector<std::string> notes;

    CheckReport() = default;
    explicit CheckReport(std::string n) : name(std::move(n)) {}

    static CheckReport not_applicable(std::string name, std::string why);

    void fail(Witness w);
    void fail(const std::string& label) { fail(Witness{label, {}, Scalar(), Scalar()}); }
    void note(std::string text) { notes.push_back(std::move(text)); }

    // Entry-wise comparison; every differing entry becomes a witness.
    bool expect_equal(const std::string& label, const SparseMat& expected, const SparseMat& actual);
    bool expect_zero(const std::string& label, const SparseMat& residual);
    bool expect_equal(const std::string& label, const Vector& expected, const Vector& actual);
    bool expect_equal(const std::string& label, const Scalar& expected, const Scalar& actual);
    bool expect(const std::string& label, bool condition);

    // Folds another report's witnesses into this one.
    void absorb(const CheckReport& other);

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct SuiteReport {
    std::string version;
    std::map<std::string, std::string> config;
    std::vector<CheckReport> checks;
    // Named text outputs (DOT graphs, tableau renderings) carried with the report.
    std::map<std::string, std::string> artifacts;
    bool passed = true;
    double duration_ms = 0;

    void add(CheckReport c);
    void recompute();

    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

std::string emit_json(const SuiteReport& report);
SuiteReport parse_json(const std::string& text);
std::string emit_text(const SuiteReport& report);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace glkm

namespace glkm {

// Raised when an operation's precondition check fails; carries that check.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& what, CheckReport failed)
        : std::runtime_error(what), report_(std::move(failed)) {}
    const CheckReport& report() const { return report_; }

private:
    CheckReport report_;
};

}  // namespace glkm
