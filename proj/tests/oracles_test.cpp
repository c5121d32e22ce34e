#include "sparsat/oracles.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "sparsat/formula.hpp"

using namespace sparsat;

TEST_CASE("tally: maps by satisfiability and length") {
  const ReductionOracle oracle = tally_reduction();
  CHECK(oracle.query(parse_formula("x1")) == "11");
  CHECK(oracle.target().member("11"));
  CHECK(oracle.query(parse_formula("(x1&!x1)")) == "00000000");
  CHECK(!oracle.target().member("00000000"));
  CHECK(oracle.direction() == ReductionDirection::Sat);
  CHECK(!oracle.has_label());
}

TEST_CASE("fingerprint: distinct unsatisfiable formulas stay distinct") {
  const ReductionOracle oracle = fingerprint_reduction();
  CHECK(oracle.query(parse_formula("(x1&!x1)")) == "0(x1&!x1)");
  CHECK(oracle.query(parse_formula("x1")) == "1");
  CHECK(oracle.query(parse_formula("(x2&!x2)")) != oracle.query(parse_formula("(x1&!x1)")));
}

TEST_CASE("broken: planted defect on length 8 only") {
  const ReductionOracle oracle = broken_reduction();
  CHECK(oracle.query(parse_formula("x1")) == "11");  // length 2, unaffected
  // "(x1&!x1)" is unsatisfiable but has length 8, so the claim flips.
  CHECK(oracle.query(parse_formula("(x1&!x1)")) == "11111111");
}

TEST_CASE("taut coreduction: tautologies map into the target") {
  const ReductionOracle oracle = taut_coreduction();
  CHECK(oracle.direction() == ReductionDirection::Taut);
  CHECK(oracle.query(parse_formula("(x1|!x1)")) == "1");
  CHECK(oracle.query(parse_formula("x1")) == "0x1");
}

TEST_CASE("chain solver: flips exactly on the chain") {
  const PCloseSolver solver = chain_pclose_solver();
  CHECK(solver.decide(parse_formula("(x1&!x1)")));   // unsat, flipped
  CHECK(solver.decide(parse_formula("x1")));         // sat, unflipped
  CHECK(!solver.decide(parse_formula("(x2&!x2)")));  // unsat, not a chain member

  const auto chain = pclose_disagreement_chain(20);
  REQUIRE(chain.size() == 4);
  CHECK(chain[0] == "(x1&!x1)");
  CHECK(chain[1] == "((x1&!x1)&1)");
  CHECK(chain[2] == "(((x1&!x1)&1)&1)");
  // At most one chain member per length.
  std::set<std::size_t> lengths;
  for (const auto& w : chain) CHECK(lengths.insert(w.size()).second);
}

TEST_CASE("chain solver: disagreement set over the corpus is exactly the chain") {
  const PCloseSolver solver = chain_pclose_solver();
  const auto corpus = enumerate_formulas(3, 9);
  std::vector<std::string> disagreements;
  for (const Formula& f : corpus)
    if (solver.decide(f) != brute_force_sat(f)) disagreements.push_back(f.str());

  std::vector<std::string> expected;
  for (const Formula& f : corpus) {
    const auto chain = pclose_disagreement_chain(f.length());
    if (std::find(chain.begin(), chain.end(), f.str()) != chain.end())
      expected.push_back(f.str());
  }
  CHECK(disagreements == expected);
  CHECK(!disagreements.empty());
}

TEST_CASE("one-query oracle: labels follow the solver") {
  const ReductionOracle oracle = one_tt_from_pclose(chain_pclose_solver());
  REQUIRE(oracle.has_label());

  // Solver answers 1 on "x1" (correctly): label NEG, query outside the
  // disagreement set, negated answer true.
  CHECK(oracle.label(parse_formula("x1")) == QueryLabel::Neg);
  CHECK(!oracle.target().member("x1"));

  // Designated disagreement: solver answers 1 on the unsatisfiable chain
  // head, so label NEG but the query is in the set -> answer false.
  CHECK(oracle.label(parse_formula("(x1&!x1)")) == QueryLabel::Neg);
  CHECK(oracle.target().member("(x1&!x1)"));

  // Solver answers 0 on an honest unsatisfiable formula: label ORIG.
  CHECK(oracle.label(parse_formula("(x2&!x2)")) == QueryLabel::Orig);
}

TEST_CASE("one-query oracle: contract holds over the corpus") {
  const ReductionOracle oracle = one_tt_from_pclose(chain_pclose_solver());
  for (const Formula& f : enumerate_formulas(3, 7)) {
    const bool member = oracle.target().member(oracle.query(f));
    const bool answered =
        oracle.label(f) == QueryLabel::Orig ? member : !member;
    CHECK(answered == brute_force_sat(f));
  }
}

TEST_CASE("verify: tally valid over the corpus") {
  const ValidityReport report = verify_reduction(tally_reduction(), enumerate_formulas(3, 7));
  CHECK(report.valid);
  CHECK(report.counterexamples.empty());
  CHECK(report.stretch_violations.empty());
  CHECK(report.census_ok);
}

TEST_CASE("verify: every built-in oracle except broken passes on corpus(3,9)") {
  const auto corpus = enumerate_formulas(3, 9);
  for (const std::string& name : {"tally", "fingerprint", "taut", "pclose"}) {
    const ValidityReport report = verify_reduction(oracle_by_name(name), corpus);
    INFO("oracle ", name);
    CHECK(report.valid);
    CHECK(report.census_ok);
    CHECK(report.stretch_violations.empty());
  }
}

TEST_CASE("verify: broken flagged invalid, first counterexample has length 8") {
  const auto corpus = enumerate_formulas(3, 9);
  const ValidityReport report = verify_reduction(broken_reduction(), corpus);
  CHECK(!report.valid);
  REQUIRE(!report.counterexamples.empty());
  CHECK(report.counterexamples.front().size() == 8);
  // The planted witness is among the counterexamples.
  CHECK(std::count(report.counterexamples.begin(), report.counterexamples.end(), "(x1&!x1)") ==
        1);
  // Every misclassified formula has the planted length.
  for (const auto& w : report.counterexamples) CHECK(w.size() == 8);
}

TEST_CASE("verify: empty corpus is vacuously valid") {
  const ValidityReport report = verify_reduction(tally_reduction(), {});
  CHECK(report.valid);
  CHECK(report.census_ok);
}

TEST_CASE("verify: report serializations") {
  const ValidityReport report =
      verify_reduction(broken_reduction(), enumerate_formulas(2, 5));
  const std::string text = report.text();
  CHECK(text.find("INVALID") != std::string::npos);

  const auto j = nlohmann::json::parse(report.json());
  CHECK(j["valid"] == false);
  CHECK(j["census_ok"].is_boolean());
  CHECK(j["counterexamples"].is_array());
  CHECK(j["stretch_violations"].is_array());
}

TEST_CASE("census soundness: built-in targets up to length 24") {
  for (const std::string& name : {"tally", "fingerprint", "taut", "pclose"}) {
    const ReductionOracle oracle = oracle_by_name(name);
    const auto& language = oracle.target();
    REQUIRE(language.enumerate_members);
    for (std::size_t n = 1; n <= 24; ++n) {
      const auto members = language.enumerate_members(n);
      CHECK(members.size() <= language.census_bound.eval(n));
      for (const auto& w : members) {
        CHECK(w.size() <= n);
        CHECK(language.member(w));
      }
    }
  }
}

TEST_CASE("determinism: replaying queries gives identical strings") {
  const auto corpus = enumerate_formulas(2, 5);
  for (const std::string& name : builtin_oracle_names()) {
    const ReductionOracle oracle = oracle_by_name(name);
    for (std::size_t i = 0; i < corpus.size(); i += 17)
      CHECK(oracle.query(corpus[i]) == oracle.query(corpus[i]));
  }
}

TEST_CASE("stretch bound: violating oracle throws on query") {
  const ReductionOracle liar(
      "liar",
      SparseLanguage{"anything", [](const std::string&) { return true; },
                     PolyBound::constant(1), nullptr},
      [](const Formula& f) { return f.str() + f.str(); }, PolyBound::linear(1),
      ReductionDirection::Sat);
  CHECK_THROWS_AS(liar.query(parse_formula("x1")), StretchViolation);
}

TEST_CASE("verify: stretch violations are reported, not thrown") {
  const ReductionOracle liar(
      "liar",
      SparseLanguage{"anything", [](const std::string&) { return true; },
                     PolyBound::constant(1), nullptr},
      [](const Formula& f) { return f.str() + f.str(); }, PolyBound::linear(1),
      ReductionDirection::Sat);
  const ValidityReport report = verify_reduction(liar, enumerate_formulas(1, 2));
  CHECK(!report.stretch_violations.empty());
}

TEST_CASE("oracle_by_name: unknown name rejected") {
  CHECK_THROWS_AS(oracle_by_name("nope"), std::invalid_argument);
}

TEST_CASE("scaled census: bound multiplies, membership unchanged") {
  const ReductionOracle scaled = tally_reduction().with_scaled_census(4);
  CHECK(scaled.target().census_bound.eval(10) == 40);
  CHECK(scaled.target().member("111"));
  CHECK(!scaled.target().member("101"));
}
