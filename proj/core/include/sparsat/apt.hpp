#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sparsat/formula.hpp"
#include "sparsat/poly_bound.hpp"

namespace sparsat {

enum class RunStatus { Accept, Reject, Timeout };

const char* to_string(RunStatus status);

/// Raised by run_bounded when a decider fails to halt within the hard
/// safety cap — a decider bug, distinct from an ordinary timeout.
class SafetyCapExceeded : public std::runtime_error {
 public:
  SafetyCapExceeded(const std::string& decider, std::uint64_t cap);
};

/// A SAT decision procedure with an explicit abstract clock: init() plans
/// the run, step() advances it one transition, and the declared bound is
/// the claimed per-length step budget outside the procedure's slow set.
/// Steps are abstract decider transitions, measured in the same unit as
/// the declared bound.
class SteppedDecider {
 public:
  struct State {
    std::uint64_t remaining;
    bool answer;
  };

  /// plan maps a formula to (total transition count, final answer).
  SteppedDecider(std::string name, PolyBound declared_bound,
                 std::function<std::pair<std::uint64_t, bool>(const Formula&)> plan);

  const std::string& name() const noexcept { return name_; }
  const PolyBound& declared_bound() const noexcept { return declared_bound_; }

  State init(const Formula& f) const;
  static bool terminal(const State& s) noexcept { return s.remaining == 0; }
  static bool accepted(const State& s) noexcept { return s.answer; }
  static State step(State s) noexcept {
    --s.remaining;
    return s;
  }

 private:
  std::string name_;
  PolyBound declared_bound_;
  std::function<std::pair<std::uint64_t, bool>(const Formula&)> plan_;
};

inline constexpr std::uint64_t kDefaultSafetyCap = 1'000'000;

struct BoundedRun {
  RunStatus status;
  std::uint64_t steps;
};

/// Executes at most budget steps (budget >= 1). Returns the decider's
/// verdict with the exact halting step count, or Timeout with steps ==
/// budget. Throws SafetyCapExceeded when the run passes safety_cap steps
/// without halting.
BoundedRun run_bounded(const SteppedDecider& decider, const Formula& f, std::uint64_t budget,
                       std::uint64_t safety_cap = kDefaultSafetyCap);

/// Always halts in one step with the brute-force answer; declared bound 1.
/// Its slow set is empty.
SteppedDecider fast_decider();

/// Answers brute force in exactly length(f) steps, except on the chain
/// "(x1|!x1)", "((x1|!x1)|1)", ... where 2^length extra idle transitions
/// push it past its declared bound n. The chain members are satisfiable,
/// so the slow set meets SAT.
SteppedDecider demo_decider();

/// Chain member strings of serialization length <= max_len, shortest first.
std::vector<std::string> demo_slow_chain(std::size_t max_len);

SteppedDecider decider_by_name(const std::string& name);  // demo | fast

/// Corpus formulas on which the decider exceeds its declared bound, and the
/// satisfiable subset of those.
struct SlowSet {
  std::vector<Formula> slow;
  std::vector<Formula> slow_satisfiable;
};

SlowSet slow_set(const SteppedDecider& decider, const std::vector<Formula>& corpus,
                 std::uint64_t safety_cap = kDefaultSafetyCap);

/// Raised by build_apt_construction when the decider disagrees with brute
/// force on a corpus formula.
class DeciderMismatch : public std::runtime_error {
 public:
  DeciderMismatch(const std::string& decider, const std::string& formula);
};

/// Output of the almost-polynomial-time construction. When the decider's
/// satisfiable slow set meets the corpus, `reduce` carries the three-way
/// many-one map (accept in time -> yes_instance, reject in time ->
/// no_instance, timeout -> the input itself). Otherwise `fallback_decider`
/// carries the direct clocked procedure (timeout means reject). Exactly one
/// of the two is populated.
struct AptConstruction {
  std::optional<Formula> yes_instance;
  std::optional<Formula> no_instance;
  std::function<Formula(const Formula&)> reduce;
  std::function<bool(const Formula&)> fallback_decider;

  bool has_reduction() const noexcept { return static_cast<bool>(reduce); }
};

/// Builds the construction over the corpus after verifying the decider
/// against brute force (throws DeciderMismatch on any disagreement).
/// yes_instance is the first satisfiable slow formula in corpus order,
/// no_instance the first corpus formula outside the satisfiable slow set.
AptConstruction build_apt_construction(const SteppedDecider& decider,
                                       const std::vector<Formula>& corpus,
                                       std::uint64_t safety_cap = kDefaultSafetyCap);

/// Membership in the decider's satisfiable slow set (the reduction target):
/// the clocked run times out and the formula is brute-force satisfiable.
bool in_satisfiable_slow_set(const SteppedDecider& decider, const Formula& f,
                             std::uint64_t safety_cap = kDefaultSafetyCap);

/// One corpus row of the constructed mapping plus its validity.
struct AptMapping {
  std::string input;
  std::string image;
  bool valid;  // sat(input) == image in the satisfiable slow set
};

struct AptReport {
  bool reduction_branch = false;
  std::optional<std::string> yes_instance;
  std::optional<std::string> no_instance;
  std::vector<AptMapping> mappings;  // reduction branch only
  std::size_t corpus_size = 0;
  bool valid = true;

  std::string text() const;
  std::string json(int indent = 2) const;
};

/// Runs the construction over the corpus and checks it pointwise: reduction
/// branch, sat(f) <=> reduce(f) in the satisfiable slow set; fallback
/// branch, fallback(f) == sat(f).
AptReport validate_apt(const AptConstruction& construction, const SteppedDecider& decider,
                       const std::vector<Formula>& corpus,
                       std::uint64_t safety_cap = kDefaultSafetyCap);

}  // namespace sparsat
