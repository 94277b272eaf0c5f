#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "kmhom/problem.hpp"

using namespace kmhom;

namespace {

ProblemFile parse_str(const char* text) {
  return parse_problem_json(Json::parse(text));
}

std::vector<std::string> issues_of(const char* text) {
  try {
    parse_str(text);
  } catch (const ProblemError& e) {
    return e.issues();
  }
  return {};
}

}  // namespace

TEST_CASE("minimal problem file gets defaults") {
  auto p = parse_str(R"({"cartan": [[2,-1],[-1,2]]})");
  CHECK(p.cartan.rank() == 2);
  CHECK(p.subset.empty());
  CHECK(p.weights.empty());
  CHECK(p.budgets.height == 8);
  CHECK(p.budgets.orbit == 10000);
  CHECK(p.budgets.slice_cap == 5000);
  CHECK_FALSE(p.budgets.iso_n_cap.has_value());
}

TEST_CASE("weights parse exactly and round-trip") {
  auto p = parse_str(R"({
    "cartan": [[2,-1],[-1,2]],
    "weights": {
      "lambda": {"labels": ["1/2", "-3"]},
      "mu": {"labels": ["0", "0"], "root_offset": ["-1", "-2"]}
    }
  })");
  CHECK(labels(p.cartan, p.weight("lambda")) ==
        std::vector<Rational>{Rational(1, 2), Rational(-3)});
  CHECK(p.weight("mu").x == std::vector<Rational>{Rational(-1), Rational(-2)});
  Json out = weight_to_json(p.cartan, p.weight("mu"));
  CHECK(out["labels"][0] == "0");
  CHECK(out["root_offset"][1] == "-2");
  CHECK_THROWS_AS(p.weight("nu"), Error);
}

TEST_CASE("schema violations are enumerated") {
  SECTION("decimal labels are rejected") {
    auto is = issues_of(R"({
      "cartan": [[2]],
      "weights": {"lambda": {"labels": ["0.5"]}}
    })");
    REQUIRE(is.size() == 1);
    CHECK(is[0].find("0.5") != std::string::npos);
  }
  SECTION("numeric labels are rejected") {
    auto is = issues_of(R"({
      "cartan": [[2]],
      "weights": {"lambda": {"labels": [5]}}
    })");
    REQUIRE(is.size() == 1);
    CHECK(is[0].find("strings") != std::string::npos);
  }
  SECTION("subset index out of range") {
    auto is = issues_of(R"({"cartan": [[2,-1],[-1,2]], "subset_S": [3]})");
    REQUIRE(is.size() == 1);
    CHECK(is[0].find("out of range") != std::string::npos);
  }
  SECTION("unknown keys are rejected and errors accumulate") {
    auto is = issues_of(R"({
      "cartan": [[2]],
      "extra": 1,
      "weights": {"lambda": {"labels": ["1"], "offset": ["0"]}},
      "budgets": {"height": 0}
    })");
    CHECK(is.size() == 3);
  }
  SECTION("invalid cartan matrices are reported") {
    CHECK_FALSE(issues_of(R"({"cartan": [[2,-1],[0,2]]})").empty());
    CHECK_FALSE(issues_of(R"({"cartan": [[2,-1]]})").empty());
  }
}

TEST_CASE("budgets: file overrides environment overrides defaults") {
  setenv("KMHOM_BUDGET_HEIGHT", "11", 1);
  setenv("KMHOM_BUDGET_ISO_N_CAP", "3", 1);
  auto p = parse_str(R"({"cartan": [[2]], "budgets": {"height": 5}})");
  CHECK(p.budgets.height == 5);                 // file wins
  CHECK(p.budgets.iso_n_cap.value() == 3);      // env fills the rest
  CHECK(p.budgets.orbit == 10000);              // defaults otherwise
  unsetenv("KMHOM_BUDGET_HEIGHT");
  unsetenv("KMHOM_BUDGET_ISO_N_CAP");
  auto q = parse_str(R"({"cartan": [[2]]})");
  CHECK(q.budgets.height == 8);
}

TEST_CASE("rational parsing is strict") {
  CHECK(parse_rational("1/2").value() == Rational(1, 2));
  CHECK(parse_rational("-3").value() == Rational(-3));
  CHECK(parse_rational("4/6").value() == Rational(2, 3));
  CHECK_FALSE(parse_rational("0.5").has_value());
  CHECK_FALSE(parse_rational("1/-2").has_value());
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("+2").has_value());
  CHECK_FALSE(parse_rational(" 1").has_value());
  CHECK(rational_to_string(Rational(-4, 6)) == "-2/3");
  CHECK(rational_to_string(Rational(5)) == "5");
}
