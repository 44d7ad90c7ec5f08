#include "glkm/linalg/ops.hpp"
#include "glkm/report/check_report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

using namespace glkm;

TEST_CASE("entry-wise comparison records witnesses", "[report]") {
    CheckReport r("cmp");
    CHECK(r.expect_equal("same", SparseMat::identity(3), SparseMat::identity(3)));
    CHECK(r.passed);
    CHECK_FALSE(r.expect_equal("diag", SparseMat::identity(2), SparseMat::diagonal({1, 5})));
    CHECK_FALSE(r.passed);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].index == std::vector<std::size_t>{1, 1});
    CHECK(r.witnesses[0].expected == Scalar(1));
    CHECK(r.witnesses[0].actual == Scalar(5));
    CHECK_FALSE(r.expect_equal("shape", SparseMat::identity(2), SparseMat::identity(3)));
    CHECK(r.witness_count == 2);
}

TEST_CASE("witness list is capped but counted", "[report]") {
    CheckReport r("many");
    r.expect_zero("z", Scalar(2) * SparseMat::identity(25));
    CHECK(r.witnesses.size() == CheckReport::witness_cap);
    CHECK(r.witness_count == 25);
    CheckReport outer("outer");
    outer.absorb(r);
    CHECK_FALSE(outer.passed);
    CHECK(outer.witness_count == 25);
    CHECK(outer.witnesses.size() == CheckReport::witness_cap);
}

TEST_CASE("JSON round trip", "[report]") {
    SuiteReport s;
    s.version = "0.1.0";
    s.config = {{"n", "3"}, {"k", "1"}};
    CheckReport a("alpha");
    a.fail(Witness{"entry", {0, 2}, Scalar(1), Scalar(mpq_class(1, 2), mpq_class(-3))});
    a.note("a note");
    a.duration_ms = 1.5;
    CheckReport b = CheckReport::not_applicable("beta", "needs two sites");
    s.add(a);
    s.add(b);
    s.artifacts["graph"] = "digraph \"g\" {\n}\n";
    s.duration_ms = 2.25;
    CHECK_FALSE(s.passed);

    const std::string text = emit_json(s);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["passed"] == false);
    CHECK(j["checks"].size() == 2);
    CHECK(parse_json(text) == s);

    const std::string human = emit_text(s);
    CHECK(human.find("alpha") != std::string::npos);
    CHECK(human.find("-- graph") != std::string::npos);
    CHECK(human.find("overall: FAIL") != std::string::npos);
}
