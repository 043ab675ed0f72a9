#include <doctest.h>

#include <fstream>

#include "fsplit/report.hpp"

using namespace fsplit;
using fsplit::cli::json;

#ifndef FSPLIT_CORPUS
#error "FSPLIT_CORPUS must point at the shipped corpus file"
#endif

TEST_SUITE("cli") {

TEST_CASE("cross case") {
    json c = json::parse(R"J({
        "name": "cross", "prime": 3, "variables": ["x", "y"], "sigma": "(x*y)^(p-1)",
        "checks": [{"kind": "splitting", "expect": "splitting"},
                   {"kind": "compatible", "ideal": ["x*y"], "expect": true}]})J");
    auto report = cli::run_case(c);
    CHECK(report.all_pass());
    REQUIRE(report.checks.size() == 2);
    CHECK(report.checks[0].verdict == "splitting");
    CHECK(report.checks[1].certificate["method"] == "both");
}

TEST_CASE("parabola case") {
    json c = json::parse(R"J({
        "name": "parabola", "prime": 2, "variables": ["x", "y"],
        "checks": [{"kind": "exists-split", "ideal": ["y*(y-x^2)"], "expect": false}]})J");
    auto report = cli::run_case(c);
    CHECK(report.all_pass());
    CHECK(report.checks[0].certificate["obstruction"] == json::array({"x", "y"}));
}

TEST_CASE("matrix case serializes the chain") {
    json c = json::parse(R"J({
        "name": "matrix", "prime": 2, "matrix": 3,
        "checks": [{"kind": "chain", "order": ["x11","x12","x21","x22","x13","x31","x23","x32","x33"],
                    "expect": {"certified": true}}]})J");
    auto report = cli::run_case(c);
    CHECK(report.all_pass());
    const json& cert = report.checks[0].certificate;
    REQUIRE(cert["steps"].size() == 9);
    CHECK(cert["steps"][0]["variable"] == "x11");
    CHECK(cert["steps"][8]["result"] == "1");
    CHECK(cert["terminal"] == 1);
}

TEST_CASE("module errors are captured per check") {
    json c = json::parse(R"J({
        "name": "errors", "prime": 3, "variables": ["x", "y"], "sigma": "x*y",
        "checks": [{"kind": "d-split", "divisor": "x"},
                   {"kind": "chain", "order": ["x", "y"], "expect": "error:NotDivisible"},
                   {"kind": "splitting", "expect": "not-splitting"}]})J");
    auto report = cli::run_case(c);
    REQUIRE(report.checks.size() == 3);
    CHECK(report.checks[0].verdict == "error:NotASplitting");
    CHECK_FALSE(report.checks[0].pass);
    CHECK(report.checks[1].pass);
    CHECK(report.checks[2].pass);
    CHECK_FALSE(report.all_pass());
}

TEST_CASE("malformed cases are usage errors") {
    CHECK_THROWS_AS(cli::run_case(json::parse(R"J({"name": "x"})J")), cli::UsageError);
    CHECK_THROWS_AS(cli::run_case(json::parse(R"J({"prime": 3, "checks": [{"kind": "nope"}]})J")), cli::UsageError);
    CHECK_THROWS_AS(cli::run_case(json::parse(R"J({"prime": 3, "variables": ["p"], "checks": []})J")), cli::UsageError);
    CHECK_THROWS_AS(cli::run_case(json::parse(R"J({"prime": 3, "checks": [{"kind": "splitting"}]})J")), cli::UsageError);
    CHECK_THROWS_AS(cli::run_case(json::parse(R"J({"prime": 3, "variables": ["x"], "sigma": "y", "checks": []})J")),
                    ParseError);
    CHECK_THROWS_AS(cli::run_corpus(json::parse(R"J({"schema": 2, "cases": []})J")), cli::UsageError);
}

TEST_CASE("expectation matching") {
    CHECK(cli::matches(json::parse(R"J({"a": 1})J"), json::parse(R"J({"a": 1, "b": 2})J")));
    CHECK_FALSE(cli::matches(json::parse(R"J({"a": 1, "c": 3})J"), json::parse(R"J({"a": 1, "b": 2})J")));
    CHECK(cli::matches(json::parse("[1, 2]"), json::parse("[1, 2]")));
    CHECK_FALSE(cli::matches(json::parse("[1]"), json::parse("[1, 2]")));
}

TEST_CASE("report schema") {
    json c = json::parse(R"J({"name": "s", "prime": 2, "checks": [{"kind": "semigroup", "generators": [2, 3]}]})J");
    json out = cli::to_json(cli::run_case(c));
    CHECK(out["schema"] == 1);
    CHECK(out["case"] == "s");
    CHECK(out["prime"] == 2);
    const json& check = out["checks"][0];
    for (const char* key : {"kind", "verdict", "expected", "pass", "certificate"}) CHECK(check.contains(key));
    CHECK(cli::to_text(cli::run_case(c)) == "PASS s p=2 semigroup: verdict={\"split\":false,\"witness\":1}\n");
}

TEST_CASE("truncated rendering") {
    auto r = make_ring(5, {"x"});
    Polynomial f(r);
    for (std::uint32_t k = 0; k < 45; ++k) f += Polynomial::monomial(r, Monomial{k});
    std::string s = cli::render_truncated(f, 40);
    CHECK(s.ends_with("+ ... (5 more terms)"));
    CHECK(cli::render_truncated(Polynomial::variable(r, 0), 40) == "x");
}

TEST_CASE("shipped corpus passes and reports deterministically") {
    std::ifstream in(FSPLIT_CORPUS);
    REQUIRE(in);
    json doc = json::parse(in);
    auto first = cli::run_corpus(doc);
    CHECK(first.all_pass());
    auto second = cli::run_corpus(doc);
    CHECK(cli::to_json(first).dump() == cli::to_json(second).dump());
    CHECK(cli::to_text(first, true) == cli::to_text(second, true));
}

}  // TEST_SUITE
