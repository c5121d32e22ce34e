#include "sparsat/formula.hpp"

#include <set>
#include <unordered_set>

#include "doctest.h"

using namespace sparsat;

TEST_CASE("parse: atoms and simple shapes") {
  CHECK(parse_formula("x1").kind() == Formula::Kind::Var);
  CHECK(parse_formula("x1").var_index() == 1);
  CHECK(parse_formula("x12").var_index() == 12);
  CHECK(parse_formula("0").kind() == Formula::Kind::Const);
  CHECK(parse_formula("1").const_value());

  const Formula f = parse_formula("(x1&!x2)");
  REQUIRE(f.kind() == Formula::Kind::Paren);
  const Formula& inner = f.child();
  REQUIRE(inner.kind() == Formula::Kind::And);
  CHECK(inner.left().var_index() == 1);
  REQUIRE(inner.right().kind() == Formula::Kind::Not);
  CHECK(inner.right().child().var_index() == 2);
}

TEST_CASE("parse: parenthesized disjunction keeps its paren nodes") {
  const Formula f = parse_formula("((x1)|(x2))");
  CHECK(f.length() == 11);
  REQUIRE(f.kind() == Formula::Kind::Paren);
  REQUIRE(f.child().kind() == Formula::Kind::Or);
  CHECK(f.child().left().kind() == Formula::Kind::Paren);
  CHECK(f.child().right().kind() == Formula::Kind::Paren);
  CHECK(f.str() == "((x1)|(x2))");
}

TEST_CASE("parse: one bare binary operator per group") {
  CHECK(parse_formula("x1&x2").kind() == Formula::Kind::And);
  CHECK(parse_formula("(x1)|(x2)").kind() == Formula::Kind::Or);
  CHECK_THROWS_AS(parse_formula("x1&x2&x3"), ParseError);
  CHECK_THROWS_AS(parse_formula("(x1&x2&x3)"), ParseError);
}

TEST_CASE("parse: rejects malformed input with the right offset") {
  auto offset_of = [](const std::string& text) {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("x0") == 1);       // zero index
  CHECK(offset_of("x01") == 1);      // leading zero
  CHECK(offset_of("x") == 1);        // missing digits
  CHECK(offset_of("(x1") == 3);      // missing ')'
  CHECK(offset_of("x1)") == 2);      // trailing characters
  CHECK(offset_of("x1 ") == 2);      // whitespace is not in the alphabet
  CHECK(offset_of("x1&&x2") == 3);
  CHECK(offset_of("y1") == 0);
  CHECK(offset_of("!") == 1);
}

TEST_CASE("serialize: canonical text and lengths") {
  CHECK(Formula::variable(1).str() == "x1");
  CHECK(Formula::variable(1).length() == 2);
  const Formula contradiction = parse_formula("(x1&!x1)");
  CHECK(contradiction.str() == "(x1&!x1)");
  CHECK(contradiction.length() == 8);
}

TEST_CASE("combine: exactly five extra symbols, output re-parses") {
  const Formula a = Formula::variable(1);
  const Formula b = Formula::variable(2);
  const Formula either = combine_or(a, b);
  CHECK(either.str() == "(x1)|(x2)");
  CHECK(either.length() == 9);
  CHECK(parse_formula(either.str()) == either);

  const Formula both = combine_and(a, Formula::constant(true));
  CHECK(both.str() == "(x1)&(1)");
  CHECK(both.length() == 8);
  CHECK(parse_formula(both.str()) == both);
}

TEST_CASE("combine: length law over an enumerated corpus") {
  const auto corpus = enumerate_formulas(2, 5);
  for (std::size_t i = 0; i < corpus.size(); i += 7)
    for (std::size_t j = 0; j < corpus.size(); j += 11) {
      const Formula c = combine_or(corpus[i], corpus[j]);
      CHECK(c.length() == corpus[i].length() + corpus[j].length() + 5);
      CHECK(combine_and(corpus[i], corpus[j]).length() == c.length());
    }
}

TEST_CASE("substitute: replaces tokens, never grows") {
  CHECK(substitute(parse_formula("(x1&!x2)"), 1, true).str() == "(1&!x2)");
  CHECK(substitute(parse_formula("x2"), 1, false).str() == "x2");  // absent variable

  for (const Formula& f : enumerate_formulas(2, 6)) {
    for (VarIndex v = 1; v <= 3; ++v)
      for (bool bit : {false, true}) {
        const Formula sub = substitute(f, v, bit);
        CHECK(sub.length() <= f.length());
        CHECK(variables(sub).count(v) == 0);
      }
  }
}

TEST_CASE("evaluate: boolean semantics and unbound detection") {
  CHECK(evaluate(parse_formula("(1&!0)"), {}));
  CHECK(evaluate(parse_formula("(x1|!x1)"), {{1, false}}));
  CHECK(!evaluate(parse_formula("(x1&!x1)"), {{1, true}}));

  try {
    evaluate(parse_formula("(1|x9)"), {});
    FAIL("expected UnboundVariableError");
  } catch (const UnboundVariableError& e) {
    CHECK(e.index() == 9);
  }
}

TEST_CASE("variables: exact occurring set") {
  CHECK(variables(parse_formula("((x3)|(x1))")) == std::set<VarIndex>{1, 3});
  CHECK(variables(parse_formula("1")).empty());
  CHECK(max_variable(parse_formula("(x2&x7)")) == 7);
  CHECK(max_variable(parse_formula("0")) == 0);
}

TEST_CASE("brute force: base cases") {
  CHECK(!brute_force_sat(parse_formula("(x1&!x1)")));
  CHECK(brute_force_taut(parse_formula("(x1|!x1)")));
  CHECK(brute_force_sat(parse_formula("x1")));
  CHECK(!brute_force_taut(parse_formula("x1")));
  CHECK(brute_force_sat(parse_formula("1")));
  CHECK(!brute_force_sat(parse_formula("0")));
}

TEST_CASE("brute force: sat/taut duality over the corpus") {
  for (const Formula& f : enumerate_formulas(2, 6))
    CHECK(brute_force_sat(f) == !brute_force_taut(negate(f)));
}

TEST_CASE("brute force: variable cap") {
  Formula wide = Formula::variable(1);
  for (VarIndex v = 2; v <= 17; ++v) {
    if (wide.kind() == Formula::Kind::Or) wide = Formula::paren(wide);
    wide = Formula::disjunction(wide, Formula::variable(v));
  }
  CHECK_THROWS_AS(brute_force_sat(wide), VariableCapError);
  CHECK(brute_force_sat(wide, 17));
}

TEST_CASE("enumerate: smallest formulas in order") {
  const auto tiny = enumerate_formulas(1, 1);
  REQUIRE(tiny.size() == 3);
  CHECK(tiny[0].str() == "0");
  CHECK(tiny[1].str() == "1");
  CHECK(tiny[2].str() == "x1");
}

namespace {

// Independent count of the enumerated family, by the class recurrence:
// operands are atoms, negations of operands, or parentheses around
// non-paren formulas; bare binaries split the remaining nodes.
std::uint64_t family_count(int max_vars, int max_nodes) {
  std::vector<std::uint64_t> atoms(max_nodes + 1, 0), nots(max_nodes + 1, 0),
      parens(max_nodes + 1, 0), bare(max_nodes + 1, 0);
  atoms[1] = 2 + static_cast<std::uint64_t>(max_vars);
  auto operand = [&](int n) { return atoms[n] + nots[n] + parens[n]; };
  for (int n = 2; n <= max_nodes; ++n) {
    nots[n] = operand(n - 1);
    parens[n] = atoms[n - 1] + nots[n - 1] + bare[n - 1];
    for (int i = 1; i <= n - 2; ++i) bare[n] += 2 * operand(i) * operand(n - 1 - i);
  }
  std::uint64_t total = 0;
  for (int n = 1; n <= max_nodes; ++n) total += operand(n) + bare[n];
  return total;
}

}  // namespace

TEST_CASE("enumerate: frozen regression count for (1,3)") {
  CHECK(enumerate_formulas(1, 3).size() == 36);
  CHECK(family_count(1, 3) == 36);
}

TEST_CASE("enumerate: matches the independent count") {
  CHECK(enumerate_formulas(2, 6).size() == family_count(2, 6));
  CHECK(enumerate_formulas(3, 7).size() == family_count(3, 7));
}

TEST_CASE("enumerate: duplicate-free, ordered, round-trips") {
  const auto corpus = enumerate_formulas(2, 6);
  std::unordered_set<std::string> seen;
  std::size_t prev_nodes = 0;
  std::string prev_text;
  for (const Formula& f : corpus) {
    const std::string text = f.str();
    CHECK(seen.insert(text).second);
    CHECK(parse_formula(text) == f);

    const std::size_t nodes = node_count(f);
    REQUIRE(nodes >= prev_nodes);
    if (nodes == prev_nodes) CHECK(prev_text < text);
    prev_nodes = nodes;
    prev_text = text;

    CHECK(max_variable(f) <= 2);
    CHECK(nodes <= 6);
  }
}

TEST_CASE("enumerate: no directly nested parentheses") {
  for (const Formula& f : enumerate_formulas(1, 4))
    CHECK(f.str().find("((") == std::string::npos);
}

TEST_CASE("round trip: serialize then parse is identity on corpus strings") {
  for (const Formula& f : enumerate_formulas(3, 5)) {
    const std::string text = f.str();
    CHECK(parse_formula(text).str() == text);
  }
}

TEST_CASE("factories: reject bare binary operands") {
  const Formula bare = Formula::conjunction(Formula::variable(1), Formula::variable(2));
  CHECK_THROWS_AS(Formula::negation(bare), std::invalid_argument);
  CHECK_THROWS_AS(Formula::conjunction(bare, Formula::variable(3)), std::invalid_argument);
  CHECK_THROWS_AS(Formula::disjunction(Formula::variable(3), bare), std::invalid_argument);
  CHECK(Formula::paren(bare).str() == "(x1&x2)");
  CHECK(negate(bare).str() == "!(x1&x2)");
}
