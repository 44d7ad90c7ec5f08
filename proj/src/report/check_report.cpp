#include "glkm/report/check_report.hpp"

#include <json.hpp>

#include <sstream>

namespace glkm {

using nlohmann::json;

CheckReport CheckReport::not_applicable(std::string name, std::string why) {
    CheckReport r(std::move(name));
    r.applicable = false;
    r.note(std::move(why));
    return r;
}

void CheckReport::fail(Witness w) {
    passed = false;
    residual_zero = false;
    ++witness_count;
    if (witnesses.size() < witness_cap) witnesses.push_back(std::move(w));
}

bool CheckReport::expect_equal(const std::string& label, const SparseMat& expected, const SparseMat& actual) {
    if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
        fail(label + ": shape " + expected.shape_str() + " vs " + actual.shape_str());
        return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < expected.rows(); ++i) {
        const auto a = expected.row(i);
        const auto b = actual.row(i);
        std::size_t s = 0, t = 0;
        while (s < a.size() || t < b.size()) {
            if (t == b.size() || (s < a.size() && a[s].col < b[t].col)) {
                fail({label, {i, a[s].col}, a[s].value, Scalar()});
                ++s;
                ok = false;
            } else if (s == a.size() || b[t].col < a[s].col) {
                fail({label, {i, b[t].col}, Scalar(), b[t].value});
                ++t;
                ok = false;
            } else {
                if (a[s].value != b[t].value) {
                    fail({label, {i, a[s].col}, a[s].value, b[t].value});
                    ok = false;
                }
                ++s;
                ++t;
            }
        }
    }
    return ok;
}

bool CheckReport::expect_zero(const std::string& label, const SparseMat& residual) {
    return expect_equal(label, SparseMat(residual.rows(), residual.cols()), residual);
}

bool CheckReport::expect_equal(const std::string& label, const Vector& expected, const Vector& actual) {
    if (expected.dim() != actual.dim()) {
        fail(label + ": dimension mismatch");
        return false;
    }
    bool ok = true;
    const Vector diff = actual - expected;
    for (const auto& e : diff.items()) {
        fail({label, {e.index}, expected.at(e.index), actual.at(e.index)});
        ok = false;
    }
    return ok;
}

bool CheckReport::expect_equal(const std::string& label, const Scalar& expected, const Scalar& actual) {
    if (expected == actual) return true;
    fail({label, {}, expected, actual});
    return false;
}

bool CheckReport::expect(const std::string& label, bool condition) {
    if (!condition) fail(label);
    return condition;
}

void CheckReport::absorb(const CheckReport& other) {
    if (other.passed) return;
    passed = false;
    residual_zero = residual_zero && other.residual_zero;
    for (const auto& w : other.witnesses)
        if (witnesses.size() < witness_cap) witnesses.push_back(w);
    witness_count += other.witness_count;
}

void SuiteReport::add(CheckReport c) {
    passed = passed && c.passed;
    checks.push_back(std::move(c));
}

void SuiteReport::recompute() {
    passed = true;
    for (const auto& c : checks) passed = passed && c.passed;
}

namespace {

json witness_json(const Witness& w) {
    return json{{"label", w.label}, {"index", w.index}, {"expected", w.expected.str()}, {"actual", w.actual.str()}};
}

Witness witness_from(const json& j) {
    return Witness{j.at("label").get<std::string>(), j.at("index").get<std::vector<std::size_t>>(),
                   Scalar::parse(j.at("expected").get<std::string>()), Scalar::parse(j.at("actual").get<std::string>())};
}

}  // namespace

std::string emit_json(const SuiteReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json w = json::array();
        for (const auto& x : c.witnesses) w.push_back(witness_json(x));
        checks.push_back(json{{"name", c.name},
                              {"passed", c.passed},
                              {"applicable", c.applicable},
                              {"residual_zero", c.residual_zero},
                              {"witnesses", w},
                              {"witness_count", c.witness_count},
                              {"duration_ms", c.duration_ms},
                              {"notes", c.notes}});
    }
    json top{{"version", report.version},
             {"config", report.config},
             {"checks", checks},
             {"artifacts", report.artifacts},
             {"passed", report.passed},
             {"duration_ms", report.duration_ms}};
    return top.dump(2) + "\n";
}

SuiteReport parse_json(const std::string& text) {
    const json top = json::parse(text);
    SuiteReport r;
    r.version = top.at("version").get<std::string>();
    r.config = top.at("config").get<std::map<std::string, std::string>>();
    r.passed = top.at("passed").get<bool>();
    r.duration_ms = top.value("duration_ms", 0.0);
    if (top.contains("artifacts")) r.artifacts = top.at("artifacts").get<std::map<std::string, std::string>>();
    for (const auto& c : top.at("checks")) {
        CheckReport cr(c.at("name").get<std::string>());
        cr.passed = c.at("passed").get<bool>();
        cr.applicable = c.value("applicable", true);
        cr.residual_zero = c.value("residual_zero", cr.passed);
        for (const auto& w : c.at("witnesses")) cr.witnesses.push_back(witness_from(w));
        cr.witness_count = c.value("witness_count", cr.witnesses.size());
        cr.duration_ms = c.at("duration_ms").get<double>();
        cr.notes = c.value("notes", std::vector<std::string>{});
        r.checks.push_back(std::move(cr));
    }
    return r;
}

std::string emit_text(const SuiteReport& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        const char* tag = !c.applicable ? "SKIP" : (c.passed ? "PASS" : "FAIL");
        os << tag << "  " << c.name;
        if (c.duration_ms > 0) os << "  (" << static_cast<long long>(c.duration_ms + 0.5) << " ms)";
        os << "\n";
        for (const auto& n : c.notes) os << "      " << n << "\n";
        for (const auto& w : c.witnesses) {
            os << "      " << w.label;
            if (!w.index.empty()) {
                os << " at (";
                for (std::size_t i = 0; i < w.index.size(); ++i) os << (i ? "," : "") << w.index[i];
                os << ")";
            }
            if (!w.index.empty() || !w.expected.is_zero() || !w.actual.is_zero())
                os << ": expected " << w.expected << ", got " << w.actual;
            os << "\n";
        }
        if (c.witness_count > c.witnesses.size())
            os << "      ... " << (c.witness_count - c.witnesses.size()) << " more\n";
    }
    for (const auto& [name, body] : report.artifacts) os << "-- " << name << "\n" << body;
    os << (report.passed ? "overall: PASS" : "overall: FAIL") << "\n";
    return os.str();
}

}  // namespace glkm
