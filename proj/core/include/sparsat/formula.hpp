#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sparsat {

using VarIndex = std::uint32_t;

/// Syntax error raised by parse_formula; offset() is the byte position of
/// the offending character (== input size for unexpected end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised by evaluate() when the assignment does not bind a variable that
/// occurs in the formula.
class UnboundVariableError : public std::runtime_error {
 public:
  explicit UnboundVariableError(VarIndex index);
  VarIndex index() const noexcept { return index_; }

 private:
  VarIndex index_;
};

/// Raised by the brute-force oracles when a formula has more variables than
/// the configured cap allows.
class VariableCapError : public std::runtime_error {
 public:
  VariableCapError(std::size_t var_count, std::size_t cap);
};

/// An immutable propositional formula over the fixed ASCII grammar
///
///   expr    := formula | formula '&' formula | formula '|' formula
///   formula := '0' | '1' | var | '!' formula | '(' expr ')'
///   var     := 'x' nonzero-digit digit*
///
/// Binary operators serialize bare; parentheses come only from Paren nodes,
/// so serialization is lossless and the character count of str() is the
/// formula length used throughout the pruning bounds. Trees share subterms
/// via shared_ptr, so copies are cheap.
class Formula {
 public:
  enum class Kind { Const, Var, Not, And, Or, Paren };

  static Formula constant(bool value);
  static Formula variable(VarIndex index);  // index >= 1
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula paren(Formula inner);

  Kind kind() const noexcept;
  bool const_value() const;   // Const only
  VarIndex var_index() const; // Var only
  const Formula& child() const;  // Not / Paren
  const Formula& left() const;   // And / Or
  const Formula& right() const;  // And / Or

  /// Character count of str(); cached, O(1).
  std::size_t length() const noexcept;

  /// Canonical serialization; parse_formula(str()) reconstructs the tree.
  std::string str() const;

  /// Structural equality (equivalent to string equality of str()).
  bool operator==(const Formula& other) const noexcept;
  bool operator!=(const Formula& other) const noexcept { return !(*this == other); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Partial truth assignment, variable index -> bit.
using Assignment = std::map<VarIndex, bool>;

/// Parses text against the grammar above. Throws ParseError on malformed
/// input, variable index 0, leading zeros, or trailing characters.
Formula parse_formula(std::string_view text);

inline std::string serialize(const Formula& f) { return f.str(); }
inline std::size_t formula_length(const Formula& f) { return f.length(); }

/// Replaces every occurrence of variable v by the constant bit. No
/// simplification is performed; the result is never longer than the input.
Formula substitute(const Formula& f, VarIndex v, bool bit);

/// Standard Boolean semantics; Paren is transparent. Both operands of a
/// binary node are evaluated, so any unbound variable is always detected.
bool evaluate(const Formula& f, const Assignment& assignment);

/// Exact set of variable indices occurring in the formula.
std::set<VarIndex> variables(const Formula& f);

/// Largest variable index occurring in the formula, 0 if none.
VarIndex max_variable(const Formula& f);

bool is_variable_free(const Formula& f);

std::size_t node_count(const Formula& f);

/// Builds Or(Paren(a), Paren(b)); serialization is "("+a+")|("+b+")",
/// exactly five characters longer than the operands combined.
Formula combine_or(const Formula& a, const Formula& b);
/// Same with '&'.
Formula combine_and(const Formula& a, const Formula& b);

/// Logical negation usable on any formula: wraps bare binary operands in
/// parentheses first so the result is well formed.
Formula negate(const Formula& f);

inline constexpr std::size_t kDefaultBruteForceVarCap = 16;

/// Exhaustive satisfiability test over all assignments to variables(f).
/// Throws VariableCapError when the formula has more than var_cap variables.
bool brute_force_sat(const Formula& f, std::size_t var_cap = kDefaultBruteForceVarCap);
/// Exhaustive tautology test; brute_force_taut(f) == !brute_force_sat(negate(f)).
bool brute_force_taut(const Formula& f, std::size_t var_cap = kDefaultBruteForceVarCap);

/// Deterministic, duplicate-free enumeration of every well-formed formula
/// with variable indices in [1, max_vars] and at most max_nodes AST nodes,
/// excluding directly nested Paren(Paren(...)) chains. Ordered by
/// (node count, serialization) ascending.
std::vector<Formula> enumerate_formulas(int max_vars, int max_nodes);

}  // namespace sparsat
