#pragma once

#include <cstdint>
#include <random>

#include "sparsat/formula.hpp"

namespace sparsat {

/// Counts and unranks the same AST family enumerate_formulas produces
/// (variables x1..xV, at most max_nodes nodes, no directly nested
/// parentheses), so draws are uniform over that family. Counting overflow
/// throws std::overflow_error; the desk-scale configurations used here stay
/// far inside 64 bits.
class RandomFormulaSource {
 public:
  RandomFormulaSource(unsigned max_var, int max_nodes);

  /// Number of formulas in the family.
  std::uint64_t family_size() const noexcept;

  /// The formula with the given rank, ordered by (node count, internal
  /// structural order). rank < family_size().
  Formula unrank(std::uint64_t rank) const;

  /// Uniform draw.
  Formula draw(std::mt19937_64& rng) const;

 private:
  struct Counts {
    std::uint64_t atoms = 0;      // Const / Var roots (node count 1 only)
    std::uint64_t nots = 0;       // Not roots
    std::uint64_t parens = 0;     // Paren roots
    std::uint64_t bare = 0;       // And / Or roots
    std::uint64_t operand() const;
    std::uint64_t all() const;
    std::uint64_t non_paren() const;
  };

  Formula unrank_operand(int nodes, std::uint64_t rank) const;
  Formula unrank_non_paren(int nodes, std::uint64_t rank) const;
  Formula unrank_bare(int nodes, std::uint64_t rank) const;
  Formula unrank_atom(std::uint64_t rank) const;

  unsigned max_var_;
  int max_nodes_;
  std::vector<Counts> counts_;  // indexed by node count
  std::uint64_t total_ = 0;
};

/// Convenience wrapper: one uniform draw from the family.
Formula random_formula(std::mt19937_64& rng, unsigned max_var, int max_nodes);

}  // namespace sparsat
