#include "sparsat/engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace sparsat {

const char* to_string(EngineMode mode) {
  switch (mode) {
    case EngineMode::Mahaney: return "MAHANEY";
    case EngineMode::Fortune: return "FORTUNE";
    case EngineMode::OneTt: return "ONE_TT";
  }
  return "?";
}

const char* to_string(Outcome outcome) {
  return outcome == Outcome::Accept ? "ACCEPT" : "REJECT";
}

const char* to_string(StageKind kind) {
  switch (kind) {
    case StageKind::Case1RemoveFirst: return "CASE1_REMOVE_FIRST";
    case StageKind::Case2RemoveCollider: return "CASE2_REMOVE_COLLIDER";
    case StageKind::OneTtAccept: return "ONE_TT_ACCEPT";
    case StageKind::FortuneReject: return "FORTUNE_REJECT";
  }
  return "?";
}

EngineMode engine_mode_from_string(const std::string& text) {
  if (text == "mahaney" || text == "MAHANEY") return EngineMode::Mahaney;
  if (text == "fortune" || text == "FORTUNE") return EngineMode::Fortune;
  if (text == "onett" || text == "ONE_TT") return EngineMode::OneTt;
  throw std::invalid_argument("unknown mode '" + text + "' (expected mahaney|fortune|onett)");
}

std::uint64_t prune_width_parameter(const ReductionOracle& oracle, std::size_t root_length) {
  // Queries are applied to "(" + a + ")" op "(" + b + ")" with both operand
  // lengths at most the root length, hence the argument 2n+5.
  std::uint64_t combined_len;
  if (__builtin_mul_overflow(std::uint64_t{2}, std::uint64_t{root_length}, &combined_len) ||
      __builtin_add_overflow(combined_len, std::uint64_t{5}, &combined_len))
    throw std::overflow_error("width parameter overflow");
  const std::uint64_t stretched = oracle.stretch_bound().eval(combined_len);
  return oracle.target().census_bound.eval(stretched);
}

std::uint64_t width_cap(const ReductionOracle& oracle, std::size_t root_length,
                        EngineMode mode) {
  const std::uint64_t t = prune_width_parameter(oracle, root_length);
  std::uint64_t cap;
  if (__builtin_add_overflow(t, std::uint64_t{1}, &cap))
    throw std::overflow_error("width cap overflow");
  if (mode == EngineMode::OneTt) {
    if (__builtin_mul_overflow(cap, std::uint64_t{2}, &cap))
      throw std::overflow_error("width cap overflow");
  }
  return cap;
}

namespace {

Formula combine_for_mode(EngineMode mode, const Formula& a, const Formula& b) {
  return mode == EngineMode::Fortune ? combine_and(a, b) : combine_or(a, b);
}

// Index of the lexicographically first colliding pair (i, j), i < j, over
// the 1-based query positions 2..k, or nullopt when all queries differ.
std::optional<std::pair<std::size_t, std::size_t>> first_collision(
    const std::vector<QueryRecord>& queries) {
  for (std::size_t a = 0; a < queries.size(); ++a)
    for (std::size_t b = a + 1; b < queries.size(); ++b)
      if (queries[a].query == queries[b].query)
        return std::make_pair(queries[a].index, queries[b].index);
  return std::nullopt;
}

}  // namespace

PruneResult prune_level(const std::vector<Formula>& formulas, const ReductionOracle& oracle,
                        std::uint64_t cap, EngineMode mode) {
  if (formulas.empty()) throw std::invalid_argument("prune_level: empty level");
  if (cap < 1) throw std::invalid_argument("prune_level: cap must be >= 1");
  {
    std::unordered_set<std::string> seen;
    for (const Formula& f : formulas)
      if (!seen.insert(f.str()).second)
        throw std::invalid_argument("prune_level: duplicate formula " + f.str());
  }
  // In one-query mode the cap is 2(t+1); recover the count threshold t+1.
  const std::uint64_t one_tt_threshold = mode == EngineMode::OneTt ? cap / 2 : 0;

  PruneResult result;
  result.surviving = formulas;
  auto& live = result.surviving;

  while (live.size() > cap) {
    StageEvent stage;
    stage.queries.reserve(live.size() - 1);
    for (std::size_t i = 1; i < live.size(); ++i) {
      const Formula combined = combine_for_mode(mode, live[0], live[i]);
      QueryRecord record{i + 1, oracle.query(combined), std::nullopt};
      if (mode == EngineMode::OneTt) record.label = oracle.label(combined);
      stage.queries.push_back(std::move(record));
    }

    const auto collision = first_collision(stage.queries);

    if (mode == EngineMode::OneTt) {
      if (!collision) {
        std::size_t neg = 0;
        for (const auto& q : stage.queries)
          if (*q.label == QueryLabel::Neg) ++neg;
        const std::size_t orig = stage.queries.size() - neg;
        if (neg >= one_tt_threshold) {
          // More distinct queries with negated answers than the target can
          // hold members: some answer is a definite yes.
          stage.kind = StageKind::OneTtAccept;
          result.stages.push_back(std::move(stage));
          result.early_outcome = Outcome::Accept;
          live.clear();
          return result;
        }
        assert(orig >= one_tt_threshold);
        (void)orig;
        stage.kind = StageKind::Case1RemoveFirst;
        stage.removed_index = 1;
        result.stages.push_back(std::move(stage));
        live.erase(live.begin());
        continue;
      }
      const auto [i, j] = *collision;
      const QueryLabel bi = *stage.queries[i - 2].label;
      const QueryLabel bj = *stage.queries[j - 2].label;
      if (bi != bj) {
        // Same query, opposite dispositions: one of the two answers is a
        // yes whichever way membership goes.
        stage.kind = StageKind::OneTtAccept;
        stage.collision_pair = *collision;
        result.stages.push_back(std::move(stage));
        result.early_outcome = Outcome::Accept;
        live.clear();
        return result;
      }
      stage.kind = StageKind::Case2RemoveCollider;
      stage.collision_pair = *collision;
      stage.removed_index = i;
      result.stages.push_back(std::move(stage));
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(i - 1));
      continue;
    }

    if (!collision) {
      if (mode == EngineMode::Fortune) {
        // All queries distinct: more of them than the target can hold, so
        // some combined conjunction is no tautology and neither is the
        // first formula; the whole run can stop.
        stage.kind = StageKind::FortuneReject;
        result.stages.push_back(std::move(stage));
        result.early_outcome = Outcome::Reject;
        live.clear();
        return result;
      }
      stage.kind = StageKind::Case1RemoveFirst;
      stage.removed_index = 1;
      result.stages.push_back(std::move(stage));
      live.erase(live.begin());
      continue;
    }

    const auto [i, j] = *collision;
    stage.kind = StageKind::Case2RemoveCollider;
    stage.collision_pair = *collision;
    stage.removed_index = i;
    result.stages.push_back(std::move(stage));
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(i - 1));
  }

  return result;
}

namespace {

struct LeafScan {
  std::vector<Formula> kept;
  std::optional<Outcome> outcome;
};

// Evaluates and drops variable-free formulas. In SAT modes a true leaf
// accepts the whole run; in Fortune mode a false leaf rejects it.
LeafScan scan_leaves(std::vector<Formula> formulas, EngineMode mode) {
  LeafScan scan;
  const bool accept_on_true = mode != EngineMode::Fortune;
  for (Formula& f : formulas) {
    if (!is_variable_free(f)) {
      scan.kept.push_back(std::move(f));
      continue;
    }
    const bool value = evaluate(f, {});
    if (accept_on_true && value) {
      scan.outcome = Outcome::Accept;
      scan.kept.push_back(std::move(f));
    } else if (!accept_on_true && !value) {
      scan.outcome = Outcome::Reject;
      scan.kept.push_back(std::move(f));
    }
    // Dead leaves (false in SAT modes, true in Fortune mode) are dropped.
  }
  return scan;
}

std::vector<std::string> serializations(const std::vector<Formula>& formulas) {
  std::vector<std::string> out;
  out.reserve(formulas.size());
  for (const Formula& f : formulas) out.push_back(f.str());
  return out;
}

DecideResult run_tree(const Formula& root, const ReductionOracle& oracle, EngineMode mode,
                      const EngineOptions& options) {
  const ReductionDirection wanted =
      mode == EngineMode::Fortune ? ReductionDirection::Taut : ReductionDirection::Sat;
  if (oracle.direction() != wanted)
    throw std::invalid_argument("oracle '" + oracle.name() + "' has direction " +
                                to_string(oracle.direction()) + ", mode " + to_string(mode) +
                                " needs " + to_string(wanted));
  if (mode == EngineMode::OneTt && !oracle.has_label()) throw MissingLabelError(oracle.name());
  const VarIndex top = max_variable(root);
  if (top > options.max_variable_index)
    throw std::invalid_argument("variable index x" + std::to_string(top) +
                                " exceeds engine maximum x" +
                                std::to_string(options.max_variable_index));

  PruneTrace trace;
  trace.root = root.str();
  trace.mode = mode;
  trace.t_value = prune_width_parameter(oracle, root.length());
  trace.width_cap = width_cap(oracle, root.length(), mode);

  // On-empty-level outcome: no satisfiable branch remains (SAT modes), or
  // every branch was already a tautology (Fortune).
  const Outcome empty_outcome =
      mode == EngineMode::Fortune ? Outcome::Accept : Outcome::Reject;

  std::optional<Outcome> outcome;
  std::vector<Formula> current;

  // Level 0 holds the root; deeper levels branch on x1, x2, ... in turn.
  for (VarIndex level = 0; level <= top; ++level) {
    std::vector<Formula> entering;
    if (level == 0) {
      entering.push_back(root);
    } else {
      entering.reserve(current.size() * 2);
      std::unordered_set<std::string> seen;
      for (const Formula& f : current)
        for (bool bit : {false, true}) {
          Formula child = substitute(f, level, bit);
          if (seen.insert(child.str()).second) entering.push_back(std::move(child));
        }
    }

    LeafScan scan = scan_leaves(std::move(entering), mode);

    LevelRecord record;
    record.level_index = level;
    record.entering = serializations(scan.kept);

    if (scan.outcome) {
      record.surviving = record.entering;
      trace.levels.push_back(std::move(record));
      outcome = scan.outcome;
      break;
    }
    if (scan.kept.empty()) {
      trace.levels.push_back(std::move(record));
      outcome = empty_outcome;
      break;
    }

    PruneResult pruned = prune_level(scan.kept, oracle, trace.width_cap, mode);
    for (const StageEvent& stage : pruned.stages) trace.query_count += stage.queries.size();
    record.stages = std::move(pruned.stages);
    record.surviving = serializations(pruned.surviving);
    trace.levels.push_back(std::move(record));

    if (pruned.early_outcome) {
      outcome = pruned.early_outcome;
      break;
    }
    current = std::move(pruned.surviving);
  }

  if (!outcome) {
    // All variables processed without a concluding leaf: only possible when
    // the loop above never ran a leaf level, i.e. never, but keep the
    // engine total.
    outcome = empty_outcome;
  }
  trace.outcome = *outcome;
  return DecideResult{trace.outcome == Outcome::Accept, std::move(trace)};
}

}  // namespace

DecideResult decide_sat_mahaney(const Formula& root, const ReductionOracle& oracle,
                                const EngineOptions& options) {
  return run_tree(root, oracle, EngineMode::Mahaney, options);
}

DecideResult decide_taut_fortune(const Formula& root, const ReductionOracle& oracle,
                                 const EngineOptions& options) {
  return run_tree(root, oracle, EngineMode::Fortune, options);
}

DecideResult decide_sat_one_tt(const Formula& root, const ReductionOracle& oracle,
                               const EngineOptions& options) {
  return run_tree(root, oracle, EngineMode::OneTt, options);
}

}  // namespace sparsat
