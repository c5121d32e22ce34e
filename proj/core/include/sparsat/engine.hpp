#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparsat/formula.hpp"
#include "sparsat/oracles.hpp"

namespace sparsat {

enum class EngineMode { Mahaney, Fortune, OneTt };
enum class Outcome { Accept, Reject };

enum class StageKind {
  Case1RemoveFirst,    // all queries distinct: the first formula goes
  Case2RemoveCollider, // two queries collide: the lower-index collider goes
  OneTtAccept,         // one-query mode found a witness: accept immediately
  FortuneReject,       // tautology mode, all queries distinct: reject
};

const char* to_string(EngineMode mode);
const char* to_string(Outcome outcome);
const char* to_string(StageKind kind);
EngineMode engine_mode_from_string(const std::string& text);

/// One oracle call inside a stage: the 1-based position i of the combined
/// partner formula, the query string, and the answer disposition when the
/// oracle is labeled.
struct QueryRecord {
  std::size_t index;
  std::string query;
  std::optional<QueryLabel> label;
};

/// One pruning stage: the queries issued and the action taken.
struct StageEvent {
  StageKind kind;
  std::vector<QueryRecord> queries;
  std::optional<std::size_t> removed_index;                       // 1-based
  std::optional<std::pair<std::size_t, std::size_t>> collision_pair;  // (i, j), i < j
};

/// One tree level: the formulas that entered pruning (after branching,
/// dedup and leaf handling), the stages run, and the survivors.
struct LevelRecord {
  std::size_t level_index;
  std::vector<std::string> entering;
  std::vector<StageEvent> stages;
  std::vector<std::string> surviving;
};

/// Complete audit trail of one engine run.
struct PruneTrace {
  std::string root;
  EngineMode mode;
  std::uint64_t width_cap = 0;
  std::uint64_t t_value = 0;
  std::vector<LevelRecord> levels;
  Outcome outcome = Outcome::Reject;
  std::uint64_t query_count = 0;
};

struct DecideResult {
  bool accepted;
  PruneTrace trace;
};

struct EngineOptions {
  VarIndex max_variable_index = 64;
};

/// The pruning width parameter t = s(r(2n+5)) for a root of length n, where
/// s is the target census bound and r the reduction stretch bound.
/// Throws std::overflow_error when the value leaves the 64-bit range.
std::uint64_t prune_width_parameter(const ReductionOracle& oracle, std::size_t root_length);

/// Per-level width cap: t+1 in Mahaney/Fortune mode, 2(t+1) in one-query mode.
std::uint64_t width_cap(const ReductionOracle& oracle, std::size_t root_length,
                        EngineMode mode);

struct PruneResult {
  std::vector<Formula> surviving;
  std::vector<StageEvent> stages;
  std::optional<Outcome> early_outcome;
};

/// Runs pruning stages on one level until at most cap formulas remain or an
/// early outcome fires. formulas must be nonempty and duplicate-free by
/// serialization; cap must be >= 1 (and even in one-query mode, where the
/// count threshold is cap/2).
PruneResult prune_level(const std::vector<Formula>& formulas, const ReductionOracle& oracle,
                        std::uint64_t cap, EngineMode mode);

/// Decides satisfiability through the pruned self-reduction tree using a
/// SAT-direction many-one oracle. With a valid oracle the outcome equals
/// brute_force_sat(root).
DecideResult decide_sat_mahaney(const Formula& root, const ReductionOracle& oracle,
                                const EngineOptions& options = {});

/// Dual engine for tautology using a TAUT-direction oracle and '&'
/// combination: a false leaf rejects immediately, and a stage where all
/// queries are distinct rejects the whole run.
DecideResult decide_taut_fortune(const Formula& root, const ReductionOracle& oracle,
                                 const EngineOptions& options = {});

/// Satisfiability through a labeled one-query oracle, pruning to 2(t+1) and
/// allowing early accepts. Throws MissingLabelError when the oracle carries
/// no label function.
DecideResult decide_sat_one_tt(const Formula& root, const ReductionOracle& oracle,
                               const EngineOptions& options = {});

}  // namespace sparsat
