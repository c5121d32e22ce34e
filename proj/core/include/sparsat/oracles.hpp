#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsat/formula.hpp"
#include "sparsat/poly_bound.hpp"

namespace sparsat {

/// Answer disposition of a one-query reduction: the query answer is taken
/// as-is (Orig) or negated (Neg).
enum class QueryLabel { Orig, Neg };

/// Which decision problem an oracle reduces: satisfiability or tautology.
enum class ReductionDirection { Sat, Taut };

const char* to_string(QueryLabel label);
const char* to_string(ReductionDirection direction);

/// A language together with its declared census polynomial: the number of
/// members of length <= n is claimed to be at most census_bound(n).
struct SparseLanguage {
  std::string name;
  std::function<bool(const std::string&)> member;
  PolyBound census_bound;
  /// Optional exhaustive enumerator of members up to a length, used by
  /// census soundness checks. Null when the language has no cheap
  /// enumeration.
  std::function<std::vector<std::string>(std::size_t max_len)> enumerate_members;
};

/// Raised when a query output is longer than the oracle's declared stretch
/// bound allows.
class StretchViolation : public std::runtime_error {
 public:
  StretchViolation(const std::string& oracle, std::size_t input_len,
                   std::size_t output_len, std::uint64_t bound);
};

/// Raised when a labeled operation is requested from an unlabeled oracle.
class MissingLabelError : public std::invalid_argument {
 public:
  explicit MissingLabelError(const std::string& oracle);
};

/// A many-one reduction to a sparse target, optionally paired with the
/// answer-disposition function of a one-query truth-table reduction.
/// query() checks the declared stretch bound on every call.
class ReductionOracle {
 public:
  using MapFn = std::function<std::string(const Formula&)>;
  using LabelFn = std::function<QueryLabel(const Formula&)>;

  ReductionOracle(std::string name, SparseLanguage target, MapFn map,
                  PolyBound stretch_bound, ReductionDirection direction,
                  LabelFn label = nullptr);

  const std::string& name() const noexcept { return name_; }
  const SparseLanguage& target() const noexcept { return target_; }
  const PolyBound& stretch_bound() const noexcept { return stretch_bound_; }
  ReductionDirection direction() const noexcept { return direction_; }
  bool has_label() const noexcept { return static_cast<bool>(label_); }

  /// Applies the reduction map; throws StretchViolation if the output
  /// exceeds stretch_bound(length of input).
  std::string query(const Formula& f) const;

  /// Answer disposition for the query; throws MissingLabelError when the
  /// oracle carries no label function.
  QueryLabel label(const Formula& f) const;

  /// Same oracle with the target census bound multiplied by factor (the
  /// bound stays valid; only the derived pruning width changes).
  ReductionOracle with_scaled_census(std::uint64_t factor) const;

 private:
  std::string name_;
  SparseLanguage target_;
  MapFn map_;
  PolyBound stretch_bound_;
  ReductionDirection direction_;
  LabelFn label_;
};

/// Reduction onto the tally language {1^k : k >= 1}: satisfiable formulas
/// map to the all-ones string of their own length, unsatisfiable ones to
/// all-zeros. Census s(n) = n, stretch r(n) = n.
ReductionOracle tally_reduction();

/// Reduction onto {"1"}: satisfiable formulas map to "1", unsatisfiable
/// ones to "0" + their serialization (so distinct non-members stay
/// distinct). Census s(n) = 1, stretch r(n) = n + 1.
ReductionOracle fingerprint_reduction();

/// Negative control: tally_reduction with the output inverted on inputs of
/// serialization length exactly 8. Not a valid reduction.
ReductionOracle broken_reduction();

/// Tautology-direction reduction onto {"1"}: tautologies map to "1",
/// everything else to "0" + serialization.
ReductionOracle taut_coreduction();

/// A solver for SAT that is allowed to err on a sparse set of inputs; the
/// number of formulas of length <= n where decide() differs from brute
/// force is claimed to be at most disagreement_census(n).
struct PCloseSolver {
  std::string name;
  std::function<bool(const Formula&)> decide;
  PolyBound disagreement_census;
  /// Optional enumerator of the serializations on which the solver is
  /// known to err, up to a length.
  std::function<std::vector<std::string>(std::size_t max_len)> known_disagreements;
};

/// Built-in solver that answers brute force except on the syntactic chain
/// "(x1&!x1)", "((x1&!x1)&1)", ... where the answer is flipped. At most one
/// chain member per length, so the disagreement census n is trivially
/// satisfied.
PCloseSolver chain_pclose_solver();

/// Chain member strings of serialization length <= max_len, shortest first.
std::vector<std::string> pclose_disagreement_chain(std::size_t max_len);

/// The one-query truth-table reduction induced by a P-close solver: the
/// query is the formula itself, the target is the disagreement set
/// {phi : solver(phi) != brute_force_sat(phi)}, and the label says whether
/// the membership answer is used directly (solver said 0) or negated
/// (solver said 1).
ReductionOracle one_tt_from_pclose(const PCloseSolver& solver);

/// Looks up a built-in oracle: tally | fingerprint | broken | taut | pclose.
/// Throws std::invalid_argument for unknown names.
ReductionOracle oracle_by_name(const std::string& name);

std::vector<std::string> builtin_oracle_names();

/// Outcome of checking an oracle against ground truth over a corpus.
/// Violations are report content, not errors.
struct ValidityReport {
  /// True iff no corpus formula witnesses a broken membership equivalence
  /// (or, for labeled oracles, a broken one-query contract).
  bool valid = true;
  std::vector<std::string> counterexamples;
  std::vector<std::string> stretch_violations;
  /// True iff, among the distinct query outputs that are members of the
  /// target, the count of members of length <= n never exceeds the census
  /// bound at n.
  bool census_ok = true;

  std::string text() const;
  std::string json(int indent = 2) const;
};

/// Checks ground_truth(phi) <=> query(phi) in target for every corpus
/// formula (ground truth is brute-force SAT or TAUT per the oracle's
/// direction); for labeled oracles checks the one-query contract
/// sat(phi) <=> (label=Orig and query in S) or (label=Neg and query not in S).
/// Also records stretch violations and runs the census check over outputs.
ValidityReport verify_reduction(const ReductionOracle& oracle,
                                const std::vector<Formula>& corpus);

}  // namespace sparsat
