#include "sparsat/apt.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace sparsat {

const char* to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Accept: return "ACCEPT";
    case RunStatus::Reject: return "REJECT";
    case RunStatus::Timeout: return "TIMEOUT";
  }
  return "?";
}

SafetyCapExceeded::SafetyCapExceeded(const std::string& decider, std::uint64_t cap)
    : std::runtime_error("decider '" + decider + "' exceeded the safety cap of " +
                         std::to_string(cap) + " steps without halting") {}

DeciderMismatch::DeciderMismatch(const std::string& decider, const std::string& formula)
    : std::runtime_error("decider '" + decider + "' disagrees with brute force on " + formula) {}

SteppedDecider::SteppedDecider(std::string name, PolyBound declared_bound,
                               std::function<std::pair<std::uint64_t, bool>(const Formula&)> plan)
    : name_(std::move(name)), declared_bound_(std::move(declared_bound)), plan_(std::move(plan)) {}

SteppedDecider::State SteppedDecider::init(const Formula& f) const {
  auto [total, answer] = plan_(f);
  return State{total, answer};
}

BoundedRun run_bounded(const SteppedDecider& decider, const Formula& f, std::uint64_t budget,
                       std::uint64_t safety_cap) {
  if (budget < 1) throw std::invalid_argument("run_bounded: budget must be >= 1");
  SteppedDecider::State state = decider.init(f);
  std::uint64_t steps = 0;
  while (!SteppedDecider::terminal(state)) {
    if (steps >= budget) return BoundedRun{RunStatus::Timeout, budget};
    if (steps >= safety_cap) throw SafetyCapExceeded(decider.name(), safety_cap);
    state = SteppedDecider::step(state);
    ++steps;
  }
  return BoundedRun{SteppedDecider::accepted(state) ? RunStatus::Accept : RunStatus::Reject,
                    steps};
}

SteppedDecider fast_decider() {
  return SteppedDecider("fast", PolyBound::constant(1), [](const Formula& f) {
    return std::make_pair(std::uint64_t{1}, brute_force_sat(f));
  });
}

std::vector<std::string> demo_slow_chain(std::size_t max_len) {
  std::vector<std::string> out;
  std::string link = "(x1|!x1)";
  while (link.size() <= max_len) {
    out.push_back(link);
    link = "(" + link + "|1)";
  }
  return out;
}

namespace {

bool in_demo_slow_chain(const std::string& w) {
  auto chain = demo_slow_chain(w.size());
  return std::find(chain.begin(), chain.end(), w) != chain.end();
}

std::uint64_t saturating_exp2(std::size_t exponent) {
  return exponent < 64 ? std::uint64_t{1} << exponent : UINT64_MAX;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? UINT64_MAX : r;
}

}  // namespace

SteppedDecider demo_decider() {
  return SteppedDecider("demo", PolyBound::linear(1), [](const Formula& f) {
    const std::string text = f.str();
    std::uint64_t total = text.size();
    if (in_demo_slow_chain(text)) total = saturating_add(total, saturating_exp2(text.size()));
    return std::make_pair(total, brute_force_sat(f));
  });
}

SteppedDecider decider_by_name(const std::string& name) {
  if (name == "demo") return demo_decider();
  if (name == "fast") return fast_decider();
  throw std::invalid_argument("unknown decider '" + name + "' (expected demo|fast)");
}

SlowSet slow_set(const SteppedDecider& decider, const std::vector<Formula>& corpus,
                 std::uint64_t safety_cap) {
  SlowSet out;
  for (const Formula& f : corpus) {
    const std::uint64_t budget = decider.declared_bound().eval(f.length());
    if (run_bounded(decider, f, budget, safety_cap).status != RunStatus::Timeout) continue;
    out.slow.push_back(f);
    if (brute_force_sat(f)) out.slow_satisfiable.push_back(f);
  }
  return out;
}

bool in_satisfiable_slow_set(const SteppedDecider& decider, const Formula& f,
                             std::uint64_t safety_cap) {
  const std::uint64_t budget = decider.declared_bound().eval(f.length());
  return run_bounded(decider, f, budget, safety_cap).status == RunStatus::Timeout &&
         brute_force_sat(f);
}

AptConstruction build_apt_construction(const SteppedDecider& decider,
                                       const std::vector<Formula>& corpus,
                                       std::uint64_t safety_cap) {
  for (const Formula& f : corpus) {
    // Completed run, however slow, must match ground truth.
    BoundedRun run = run_bounded(decider, f, safety_cap, safety_cap);
    if (run.status == RunStatus::Timeout) throw SafetyCapExceeded(decider.name(), safety_cap);
    if ((run.status == RunStatus::Accept) != brute_force_sat(f))
      throw DeciderMismatch(decider.name(), f.str());
  }

  const SlowSet sets = slow_set(decider, corpus, safety_cap);
  AptConstruction construction;

  if (sets.slow_satisfiable.empty()) {
    construction.fallback_decider = [decider, safety_cap](const Formula& f) {
      const std::uint64_t budget = decider.declared_bound().eval(f.length());
      return run_bounded(decider, f, budget, safety_cap).status == RunStatus::Accept;
    };
    return construction;
  }

  construction.yes_instance = sets.slow_satisfiable.front();
  for (const Formula& f : corpus) {
    if (!in_satisfiable_slow_set(decider, f, safety_cap)) {
      construction.no_instance = f;
      break;
    }
  }
  if (!construction.no_instance)
    throw std::runtime_error("decider '" + decider.name() +
                             "': every corpus formula is in the satisfiable slow set");

  const Formula yes = *construction.yes_instance;
  const Formula no = *construction.no_instance;
  construction.reduce = [decider, safety_cap, yes, no](const Formula& f) {
    const std::uint64_t budget = decider.declared_bound().eval(f.length());
    switch (run_bounded(decider, f, budget, safety_cap).status) {
      case RunStatus::Accept: return yes;
      case RunStatus::Reject: return no;
      case RunStatus::Timeout: return f;
    }
    return f;
  };
  return construction;
}

AptReport validate_apt(const AptConstruction& construction, const SteppedDecider& decider,
                       const std::vector<Formula>& corpus, std::uint64_t safety_cap) {
  AptReport report;
  report.corpus_size = corpus.size();
  report.reduction_branch = construction.has_reduction();
  if (construction.yes_instance) report.yes_instance = construction.yes_instance->str();
  if (construction.no_instance) report.no_instance = construction.no_instance->str();

  for (const Formula& f : corpus) {
    const bool sat = brute_force_sat(f);
    if (construction.has_reduction()) {
      const Formula image = construction.reduce(f);
      const bool ok = sat == in_satisfiable_slow_set(decider, image, safety_cap);
      report.mappings.push_back(AptMapping{f.str(), image.str(), ok});
      if (!ok) report.valid = false;
    } else {
      if (construction.fallback_decider(f) != sat) report.valid = false;
    }
  }
  return report;
}

std::string AptReport::text() const {
  std::ostringstream out;
  if (reduction_branch) {
    out << "branch: reduction (satisfiable slow set nonempty)\n";
    out << "yes instance: " << yes_instance.value_or("-") << "\n";
    out << "no instance: " << no_instance.value_or("-") << "\n";
    out << "corpus size: " << corpus_size << "\n";
    constexpr std::size_t kMaxListed = 20;
    for (std::size_t i = 0; i < mappings.size() && i < kMaxListed; ++i)
      out << "  " << mappings[i].input << " -> " << mappings[i].image
          << (mappings[i].valid ? "" : "  [MISMATCH]") << "\n";
    if (mappings.size() > kMaxListed)
      out << "  ... and " << mappings.size() - kMaxListed << " more\n";
    out << (valid ? "reduction branch, valid over corpus\n"
                  : "reduction branch, INVALID over corpus\n");
  } else {
    out << "branch: fallback decider (satisfiable slow set empty)\n";
    out << "corpus size: " << corpus_size << "\n";
    out << (valid ? "empty-N' branch, decider agrees with brute force\n"
                  : "empty-N' branch, decider DISAGREES with brute force\n");
  }
  return out.str();
}

std::string AptReport::json(int indent) const {
  nlohmann::json j;
  j["branch"] = reduction_branch ? "reduction" : "fallback";
  j["valid"] = valid;
  j["corpus_size"] = corpus_size;
  if (yes_instance) j["yes_instance"] = *yes_instance;
  if (no_instance) j["no_instance"] = *no_instance;
  if (reduction_branch) {
    j["mappings"] = nlohmann::json::array();
    for (const auto& m : mappings)
      j["mappings"].push_back({{"input", m.input}, {"image", m.image}, {"valid", m.valid}});
  }
  return j.dump(indent) + "\n";
}

}  // namespace sparsat
