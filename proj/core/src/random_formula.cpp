#include "sparsat/random_formula.hpp"

#include <stdexcept>

namespace sparsat {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("formula family too large");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("formula family too large");
  return r;
}

}  // namespace

std::uint64_t RandomFormulaSource::Counts::operand() const {
  return checked_add(checked_add(atoms, nots), parens);
}

std::uint64_t RandomFormulaSource::Counts::all() const {
  return checked_add(operand(), bare);
}

std::uint64_t RandomFormulaSource::Counts::non_paren() const {
  return checked_add(checked_add(atoms, nots), bare);
}

RandomFormulaSource::RandomFormulaSource(unsigned max_var, int max_nodes)
    : max_var_(max_var), max_nodes_(max_nodes) {
  if (max_var < 1) throw std::invalid_argument("max_var must be >= 1");
  if (max_nodes < 1) throw std::invalid_argument("max_nodes must be >= 1");
  counts_.resize(static_cast<std::size_t>(max_nodes) + 1);
  counts_[1].atoms = 2 + max_var;
  for (int n = 2; n <= max_nodes; ++n) {
    auto& c = counts_[static_cast<std::size_t>(n)];
    const auto& prev = counts_[static_cast<std::size_t>(n - 1)];
    c.nots = prev.operand();
    c.parens = prev.non_paren();
    for (int i = 1; i <= n - 2; ++i) {
      const std::uint64_t lefts = counts_[static_cast<std::size_t>(i)].operand();
      const std::uint64_t rights = counts_[static_cast<std::size_t>(n - 1 - i)].operand();
      c.bare = checked_add(c.bare, checked_mul(2, checked_mul(lefts, rights)));
    }
  }
  for (int n = 1; n <= max_nodes; ++n)
    total_ = checked_add(total_, counts_[static_cast<std::size_t>(n)].all());
}

std::uint64_t RandomFormulaSource::family_size() const noexcept { return total_; }

Formula RandomFormulaSource::unrank_atom(std::uint64_t rank) const {
  if (rank == 0) return Formula::constant(false);
  if (rank == 1) return Formula::constant(true);
  return Formula::variable(static_cast<VarIndex>(rank - 1));
}

Formula RandomFormulaSource::unrank_operand(int nodes, std::uint64_t rank) const {
  const auto& c = counts_[static_cast<std::size_t>(nodes)];
  if (rank < c.atoms) return unrank_atom(rank);
  rank -= c.atoms;
  if (rank < c.nots) return Formula::negation(unrank_operand(nodes - 1, rank));
  rank -= c.nots;
  return Formula::paren(unrank_non_paren(nodes - 1, rank));
}

Formula RandomFormulaSource::unrank_non_paren(int nodes, std::uint64_t rank) const {
  const auto& c = counts_[static_cast<std::size_t>(nodes)];
  if (rank < c.atoms) return unrank_atom(rank);
  rank -= c.atoms;
  if (rank < c.nots) return Formula::negation(unrank_operand(nodes - 1, rank));
  rank -= c.nots;
  return unrank_bare(nodes, rank);
}

Formula RandomFormulaSource::unrank_bare(int nodes, std::uint64_t rank) const {
  for (int i = 1; i <= nodes - 2; ++i) {
    const std::uint64_t lefts = counts_[static_cast<std::size_t>(i)].operand();
    const std::uint64_t rights = counts_[static_cast<std::size_t>(nodes - 1 - i)].operand();
    const std::uint64_t per_op = checked_mul(lefts, rights);
    for (bool conj : {true, false}) {
      if (rank < per_op) {
        Formula left = unrank_operand(i, rank / rights);
        Formula right = unrank_operand(nodes - 1 - i, rank % rights);
        return conj ? Formula::conjunction(std::move(left), std::move(right))
                    : Formula::disjunction(std::move(left), std::move(right));
      }
      rank -= per_op;
    }
  }
  throw std::logic_error("unrank_bare: rank out of range");
}

Formula RandomFormulaSource::unrank(std::uint64_t rank) const {
  if (rank >= total_) throw std::out_of_range("formula rank out of range");
  for (int n = 1; n <= max_nodes_; ++n) {
    const auto& c = counts_[static_cast<std::size_t>(n)];
    const std::uint64_t here = c.all();
    if (rank < here) {
      if (rank < c.operand()) return unrank_operand(n, rank);
      return unrank_bare(n, rank - c.operand());
    }
    rank -= here;
  }
  throw std::logic_error("unrank: rank out of range");
}

Formula RandomFormulaSource::draw(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, total_ - 1);
  return unrank(dist(rng));
}

Formula random_formula(std::mt19937_64& rng, unsigned max_var, int max_nodes) {
  return RandomFormulaSource(max_var, max_nodes).draw(rng);
}

}  // namespace sparsat
