#include "sparsat/oracles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace sparsat {

const char* to_string(QueryLabel label) {
  return label == QueryLabel::Orig ? "ORIG" : "NEG";
}

const char* to_string(ReductionDirection direction) {
  return direction == ReductionDirection::Sat ? "SAT" : "TAUT";
}

StretchViolation::StretchViolation(const std::string& oracle, std::size_t input_len,
                                   std::size_t output_len, std::uint64_t bound)
    : std::runtime_error("oracle '" + oracle + "': query output length " +
                         std::to_string(output_len) + " exceeds stretch bound " +
                         std::to_string(bound) + " for input length " +
                         std::to_string(input_len)) {}

MissingLabelError::MissingLabelError(const std::string& oracle)
    : std::invalid_argument("oracle '" + oracle + "' has no label function") {}

ReductionOracle::ReductionOracle(std::string name, SparseLanguage target, MapFn map,
                                 PolyBound stretch_bound, ReductionDirection direction,
                                 LabelFn label)
    : name_(std::move(name)),
      target_(std::move(target)),
      map_(std::move(map)),
      stretch_bound_(std::move(stretch_bound)),
      direction_(direction),
      label_(std::move(label)) {}

std::string ReductionOracle::query(const Formula& f) const {
  std::string out = map_(f);
  const std::uint64_t bound = stretch_bound_.eval(f.length());
  if (out.size() > bound) throw StretchViolation(name_, f.length(), out.size(), bound);
  return out;
}

QueryLabel ReductionOracle::label(const Formula& f) const {
  if (!label_) throw MissingLabelError(name_);
  return label_(f);
}

ReductionOracle ReductionOracle::with_scaled_census(std::uint64_t factor) const {
  SparseLanguage scaled = target_;
  scaled.census_bound = target_.census_bound.scaled(factor);
  return ReductionOracle(name_, std::move(scaled), map_, stretch_bound_, direction_, label_);
}

// --- built-in oracles ------------------------------------------------------

namespace {

bool is_all_ones(const std::string& w) {
  return !w.empty() && w.find_first_not_of('1') == std::string::npos;
}

std::vector<std::string> ones_strings_up_to(std::size_t max_len) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= max_len; ++k) out.emplace_back(k, '1');
  return out;
}

SparseLanguage tally_language() {
  return SparseLanguage{
      "tally-ones",
      is_all_ones,
      PolyBound::linear(1),
      ones_strings_up_to,
  };
}

SparseLanguage singleton_one_language() {
  return SparseLanguage{
      "singleton-one",
      [](const std::string& w) { return w == "1"; },
      PolyBound::constant(1),
      [](std::size_t max_len) {
        return max_len >= 1 ? std::vector<std::string>{"1"} : std::vector<std::string>{};
      },
  };
}

}  // namespace

ReductionOracle tally_reduction() {
  return ReductionOracle(
      "tally", tally_language(),
      [](const Formula& f) {
        return std::string(f.length(), brute_force_sat(f) ? '1' : '0');
      },
      PolyBound::linear(1), ReductionDirection::Sat);
}

ReductionOracle fingerprint_reduction() {
  return ReductionOracle(
      "fingerprint", singleton_one_language(),
      [](const Formula& f) {
        return brute_force_sat(f) ? std::string("1") : "0" + f.str();
      },
      PolyBound::linear(1, 1), ReductionDirection::Sat);
}

ReductionOracle broken_reduction() {
  return ReductionOracle(
      "broken", tally_language(),
      [](const Formula& f) {
        bool claim = brute_force_sat(f);
        if (f.length() == 8) claim = !claim;  // the planted defect
        return std::string(f.length(), claim ? '1' : '0');
      },
      PolyBound::linear(1), ReductionDirection::Sat);
}

ReductionOracle taut_coreduction() {
  return ReductionOracle(
      "taut", singleton_one_language(),
      [](const Formula& f) {
        return brute_force_taut(f) ? std::string("1") : "0" + f.str();
      },
      PolyBound::linear(1, 1), ReductionDirection::Taut);
}

// --- P-close solver and the induced one-query reduction ---------------------

std::vector<std::string> pclose_disagreement_chain(std::size_t max_len) {
  std::vector<std::string> out;
  std::string link = "(x1&!x1)";
  while (link.size() <= max_len) {
    out.push_back(link);
    link = "(" + link + "&1)";
  }
  return out;
}

namespace {

bool in_disagreement_chain(const std::string& w) {
  auto chain = pclose_disagreement_chain(w.size());
  return std::find(chain.begin(), chain.end(), w) != chain.end();
}

}  // namespace

PCloseSolver chain_pclose_solver() {
  return PCloseSolver{
      "chain-pclose",
      [](const Formula& f) { return brute_force_sat(f) != in_disagreement_chain(f.str()); },
      PolyBound::linear(1),
      pclose_disagreement_chain,
  };
}

ReductionOracle one_tt_from_pclose(const PCloseSolver& solver) {
  auto decide = solver.decide;
  SparseLanguage disagreement{
      solver.name + "-disagreement",
      [decide](const std::string& w) {
        Formula f = parse_formula(w);
        return decide(f) != brute_force_sat(f);
      },
      solver.disagreement_census,
      solver.known_disagreements,
  };
  return ReductionOracle(
      "pclose", std::move(disagreement),
      [](const Formula& f) { return f.str(); }, PolyBound::linear(1),
      ReductionDirection::Sat,
      [decide](const Formula& f) { return decide(f) ? QueryLabel::Neg : QueryLabel::Orig; });
}

ReductionOracle oracle_by_name(const std::string& name) {
  if (name == "tally") return tally_reduction();
  if (name == "fingerprint") return fingerprint_reduction();
  if (name == "broken") return broken_reduction();
  if (name == "taut") return taut_coreduction();
  if (name == "pclose") return one_tt_from_pclose(chain_pclose_solver());
  throw std::invalid_argument("unknown oracle '" + name +
                              "' (expected tally|fingerprint|broken|taut|pclose)");
}

std::vector<std::string> builtin_oracle_names() {
  return {"tally", "fingerprint", "broken", "taut", "pclose"};
}

// --- verification ------------------------------------------------------------

ValidityReport verify_reduction(const ReductionOracle& oracle,
                                const std::vector<Formula>& corpus) {
  ValidityReport report;
  std::map<std::size_t, std::vector<std::string>> member_outputs_by_len;

  for (const Formula& f : corpus) {
    std::string q;
    try {
      q = oracle.query(f);
    } catch (const StretchViolation&) {
      report.stretch_violations.push_back(f.str());
      continue;
    }

    const bool in_target = oracle.target().member(q);
    bool ok;
    if (oracle.has_label()) {
      const bool sat = brute_force_sat(f);
      const QueryLabel b = oracle.label(f);
      ok = sat == (b == QueryLabel::Orig ? in_target : !in_target);
    } else {
      const bool truth = oracle.direction() == ReductionDirection::Sat
                             ? brute_force_sat(f)
                             : brute_force_taut(f);
      ok = truth == in_target;
    }
    if (!ok) report.counterexamples.push_back(f.str());

    if (in_target) {
      auto& bucket = member_outputs_by_len[q.size()];
      if (std::find(bucket.begin(), bucket.end(), q) == bucket.end()) bucket.push_back(q);
    }
  }

  // Census over outputs: distinct target members seen among outputs of
  // length <= n must not exceed the declared bound at n.
  std::uint64_t running = 0;
  for (const auto& [len, members] : member_outputs_by_len) {
    running += members.size();
    if (running > oracle.target().census_bound.eval(len)) {
      report.census_ok = false;
      break;
    }
  }

  report.valid = report.counterexamples.empty();
  return report;
}

namespace {

void list_witnesses(std::ostringstream& out, const std::vector<std::string>& witnesses) {
  constexpr std::size_t kMaxListed = 10;
  for (std::size_t i = 0; i < witnesses.size() && i < kMaxListed; ++i)
    out << "  " << witnesses[i] << "\n";
  if (witnesses.size() > kMaxListed)
    out << "  ... and " << witnesses.size() - kMaxListed << " more\n";
}

}  // namespace

std::string ValidityReport::text() const {
  std::ostringstream out;
  out << "validity: " << (valid ? "valid" : "INVALID") << "\n";
  out << "counterexamples: " << counterexamples.size() << "\n";
  list_witnesses(out, counterexamples);
  out << "stretch violations: " << stretch_violations.size() << "\n";
  list_witnesses(out, stretch_violations);
  out << "census: " << (census_ok ? "ok" : "VIOLATED") << "\n";
  return out.str();
}

std::string ValidityReport::json(int indent) const {
  nlohmann::json j;
  j["valid"] = valid;
  j["counterexamples"] = counterexamples;
  j["stretch_violations"] = stretch_violations;
  j["census_ok"] = census_ok;
  return j.dump(indent) + "\n";
}

}  // namespace sparsat
