#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3dream/cases.hpp"
#include "k3dream/errors.hpp"
#include "k3dream/wps.hpp"

using namespace k3dream;

TEST_CASE("wps_intersection: weighted hypersurface numbers") {
  CHECK(wps_intersection({{1, 3, 7, 10}, {21, 12, 12}}) == Rat(72, 5));
  CHECK(wps_intersection({{1, 1, 4, 6}, {12, 4, 4}}) == 8);
  CHECK(wps_intersection({{1, 1, 1, 2}, {5, 1, 1}}) == Rat(5, 2));
  CHECK_THROWS_AS(wps_intersection({{1, 2}, {3, 4}}), DimensionMismatch);
}

TEST_CASE("wps_intersection: rejects nonpositive data") {
  CHECK_THROWS_AS(wps_intersection({{1, 1, 0, 2}, {5, 1, 1}}),
                  DimensionMismatch);
  CHECK_THROWS_AS(wps_intersection({{1, 1, 1, 2}, {5, -1, 1}}),
                  DimensionMismatch);
}

TEST_CASE("ledger_solve: rational coefficients in relations") {
  LedgerProblem p;
  p.divisors = {"H", "G1", "G2"};
  p.knowns["H.H"] = 4;
  p.knowns["H.G1"] = 2;
  p.knowns["G1.G2"] = 1;
  p.relations = {"3/2 H = G1 + G2"};
  auto solved = ledger_solve(p);
  CHECK(solved.at("H.G2") == 4);       // 3/2 * 4 - 2
  CHECK(solved.at("G1.G1") == 2);      // 3/2 * 2 - 1
  CHECK(solved.at("G2.G2") == 5);      // 3/2 * 4 - 1
}

TEST_CASE("wps_intersection: multiplicative in each degree") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> w(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    WpsSpec spec{{w(rng), w(rng), w(rng), w(rng)}, {w(rng), w(rng), w(rng)}};
    Rat base = wps_intersection(spec);
    for (std::size_t i = 0; i < spec.degrees.size(); ++i) {
      WpsSpec doubled = spec;
      doubled.degrees[i] *= 2;
      CHECK(wps_intersection(doubled) == 2 * base);
    }
  }
}

TEST_CASE("ledger_solve: the degree-10 system") {
  LedgerProblem p;
  p.divisors = {"H", "G1", "G2", "G3"};
  p.knowns["H.H"] = Rat(2, 3);
  p.knowns["H.G1"] = 1;
  p.knowns["G1.G2"] = 5;
  p.knowns["G1.G3"] = 7;
  p.relations = {"3H = G1 + G2", "5H = G1 + G3"};
  auto solved = ledger_solve(p);
  CHECK(solved.at("G1.G1") == -2);
  CHECK(solved.at("G2.G2") == -2);
  CHECK(solved.at("G3.G3") == Rat(14, 3));
  CHECK(solved.at("H.G2") == 1);
  CHECK(solved.at("H.G3") == Rat(7, 3));
  CHECK(solved.at("G2.G3") == 0);
}

TEST_CASE("ledger_solve: the degree-9 system") {
  LedgerProblem p;
  p.divisors = {"H", "G1", "G2", "G3"};
  p.knowns["H.H"] = Rat(3, 4);
  p.knowns["H.G1"] = 1;
  p.knowns["G1.G2"] = 5;
  p.knowns["G1.G3"] = 6;
  p.relations = {"3H = G1 + G2", "4H = G1 + G3"};
  auto solved = ledger_solve(p);
  CHECK(solved.at("G1.G1") == -2);
  CHECK(solved.at("G2.G2") == Rat(-5, 4));
  CHECK(solved.at("G3.G3") == 2);
}

TEST_CASE("ledger_solve: degree-two relations and failure modes") {
  LedgerProblem p;
  p.divisors = {"G1", "G2"};
  p.relations = {"G1^2 = G2.G2"};
  CHECK_THROWS_AS(ledger_solve(p), Underdetermined);

  LedgerProblem q;
  q.divisors = {"G1", "G2"};
  q.knowns["G1.G1"] = 1;
  q.knowns["G1.G2"] = 0;
  q.relations = {"G2^2 = 3 G1.G1", "G2.G2 = 5 G1.G1"};
  CHECK_THROWS_AS(ledger_solve(q), Inconsistent);

  LedgerProblem ok;
  ok.divisors = {"G1", "G2"};
  ok.knowns["G1.G1"] = Rat(1, 2);
  ok.knowns["G1.G2"] = 2;
  ok.relations = {"G2^2 = 3 G1.G1 + G1.G2"};
  auto solved = ledger_solve(ok);
  CHECK(solved.at("G2.G2") == Rat(7, 2));

  LedgerProblem bad;
  bad.divisors = {"G1"};
  bad.relations = {"G1 + = G1"};
  CHECK_THROWS_AS(ledger_solve(bad), ParseError);
  bad.relations = {"G1 = X2"};
  CHECK_THROWS_AS(ledger_solve(bad), ParseError);
}

TEST_CASE("paut_check: published dimension rows") {
  CHECK(paut_check(10, 1, 9));
  CHECK(paut_check(27, 10, 1));
  CHECK(paut_check(25, 8, 1));
  CHECK(paut_check(24, 8, 2));
  CHECK(paut_check(22, 7, 3));
  CHECK(!paut_check(24, 9, 2));
  CHECK_THROWS_AS(paut_check(-1, 0, 0), DimensionMismatch);
}

TEST_CASE("run_case: every registry case reproduces its constants") {
  for (const auto& name :
       {"X21", "X12", "X10", "X9", "X5", "SpecF", "DetQuartics", "A4Example"}) {
    CaseReport report = run_case(name);
    INFO("case ", name);
    CHECK(report.passed());
    CHECK(!report.checks.empty());
    for (const auto& c : report.checks) {
      INFO(c.name, ": expected ", c.expected, ", computed ", c.computed);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("run_case: specific golden values stay pinned") {
  CaseReport x21 = run_case("X21");
  auto find = [&](const CaseReport& r, const std::string& name) {
    for (const auto& c : r.checks)
      if (c.name == name) return c;
    throw std::runtime_error("missing check " + name);
  };
  CHECK(find(x21, "G1.G1").computed == "-2/5");
  CHECK(find(x21, "G2.G2").computed == "-2/5");
  CHECK(find(x21, "G1.G2").computed == "38/5");

  CaseReport x9 = run_case("X9");
  CHECK(find(x9, "G2.G2").computed == "-5/4");
  CHECK(find(x9, "G3.G3").computed == "2");

  CaseReport specf = run_case("SpecF");
  CHECK(find(specf, "complement_gram").computed == "[[4,0] [0,-8]]");
  CHECK(find(specf, "neg2_antipodal_pairs").computed == "2");
  CHECK(find(specf, "zero_quadric_solutions").computed == "0");

  CaseReport det = run_case("DetQuartics");
  CHECK(find(det, "disc20_verdict").computed == "NotMoriDream");
  CHECK(find(det, "disc17_verdict").computed == "MoriDream");
  CHECK(find(det, "disc16_verdict").computed == "MoriDream");
  CHECK(find(det, "disc9_verdict").computed == "MoriDream");
  CHECK(find(det, "disc12_verdict").computed == "MoriDream");

  CaseReport a4 = run_case("A4Example");
  CHECK(find(a4, "a4_neg2_class_verdict").computed == "MoriDream");
  CHECK(find(a4, "a4_multiples_of_4_verdict").computed == "NotMoriDream");
  CHECK(find(a4, "equivalence_guard").computed == "HypothesisViolated");
}

TEST_CASE("run_case: unknown names and registry override") {
  CHECK_THROWS_AS(run_case("Nope"), UnknownCase);
  CHECK_THROWS_AS(run_case("X10", "/nonexistent/registry.json"), RegistryError);
  auto names = registry_case_names();
  CHECK(names.size() == 8);
}
