// sparsat: decide SAT/TAUT through a pruned downward self-reduction tree
// driven by a many-one reduction to a sparse set.
//
// Exit codes: 0 accept/valid, 1 reject/invalid, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sparsat/apt.hpp"
#include "sparsat/engine.hpp"
#include "sparsat/experiment.hpp"
#include "sparsat/formula.hpp"
#include "sparsat/oracles.hpp"
#include "sparsat/trace_io.hpp"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

sparsat::Formula formula_from_args(const std::string& formula_text,
                                   const std::string& file_path) {
  if (formula_text.empty() == file_path.empty())
    throw UsageError("provide exactly one of --formula and --file");
  if (!formula_text.empty()) return sparsat::parse_formula(formula_text);

  std::ifstream in(file_path);
  if (!in) throw UsageError("cannot open " + file_path);
  std::string line, extra;
  if (!std::getline(in, line) || line.empty())
    throw UsageError(file_path + ": expected one formula on the first line");
  while (std::getline(in, extra))
    if (!extra.empty()) throw UsageError(file_path + ": expected exactly one formula line");
  return sparsat::parse_formula(line);
}

int cmd_decide(const std::string& mode_name, const std::string& oracle_name,
               const std::string& formula_text, const std::string& file_path,
               const std::string& trace_path, const std::string& dot_path) {
  const sparsat::EngineMode mode = sparsat::engine_mode_from_string(mode_name);
  const sparsat::Formula root = formula_from_args(formula_text, file_path);
  const sparsat::ReductionOracle oracle = sparsat::oracle_by_name(oracle_name);

  sparsat::DecideResult result = [&] {
    switch (mode) {
      case sparsat::EngineMode::Mahaney: return sparsat::decide_sat_mahaney(root, oracle);
      case sparsat::EngineMode::Fortune: return sparsat::decide_taut_fortune(root, oracle);
      case sparsat::EngineMode::OneTt: return sparsat::decide_sat_one_tt(root, oracle);
    }
    throw std::logic_error("unreachable");
  }();

  if (!trace_path.empty())
    sparsat::write_text_file(trace_path, sparsat::trace_json(result.trace));
  if (!dot_path.empty()) sparsat::write_text_file(dot_path, sparsat::trace_dot(result.trace));

  if (mode == sparsat::EngineMode::Fortune)
    std::cout << (result.accepted ? "TAUT" : "NOT-TAUT") << "\n";
  else
    std::cout << (result.accepted ? "SAT" : "UNSAT") << "\n";
  return result.accepted ? kExitAccept : kExitReject;
}

int cmd_verify(const std::string& oracle_name, int max_vars, int max_nodes,
               const std::string& json_path) {
  const sparsat::ReductionOracle oracle = sparsat::oracle_by_name(oracle_name);
  const std::vector<sparsat::Formula> corpus = sparsat::enumerate_formulas(max_vars, max_nodes);
  const sparsat::ValidityReport report = sparsat::verify_reduction(oracle, corpus);
  std::cout << "oracle: " << oracle.name() << "\n"
            << "corpus: " << corpus.size() << " formulas (max_vars=" << max_vars
            << ", max_nodes=" << max_nodes << ")\n"
            << report.text();
  if (!json_path.empty()) sparsat::write_text_file(json_path, report.json());
  return report.valid ? kExitAccept : kExitReject;
}

int cmd_corpus(int max_vars, int max_nodes) {
  for (const sparsat::Formula& f : sparsat::enumerate_formulas(max_vars, max_nodes))
    std::cout << f.str() << "\n";
  return kExitAccept;
}

int cmd_apt(const std::string& decider_name, int max_vars, int max_nodes,
            const std::string& json_path) {
  const sparsat::SteppedDecider decider = sparsat::decider_by_name(decider_name);
  const std::vector<sparsat::Formula> corpus = sparsat::enumerate_formulas(max_vars, max_nodes);
  const sparsat::AptConstruction construction =
      sparsat::build_apt_construction(decider, corpus);
  const sparsat::AptReport report = sparsat::validate_apt(construction, decider, corpus);
  std::cout << "decider: " << decider.name() << "\n" << report.text();
  if (!json_path.empty()) sparsat::write_text_file(json_path, report.json());
  return report.valid ? kExitAccept : kExitReject;
}

std::pair<unsigned, unsigned> parse_var_range(const std::string& text) {
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      const unsigned v = static_cast<unsigned>(std::stoul(text));
      return {v, v};
    }
    const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, sep)));
    const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(sep + 2)));
    if (lo < 1 || lo > hi) throw UsageError("bad variable range '" + text + "'");
    return {lo, hi};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("bad variable range '" + text + "' (expected e.g. 2..6)");
  }
}

int cmd_experiment(const std::string& oracle_name, const std::string& var_range,
                   const std::vector<std::uint64_t>& scales, const std::string& csv_path,
                   std::uint64_t seed, unsigned runs, int max_nodes) {
  sparsat::ExperimentConfig config;
  config.oracle = oracle_name;
  std::tie(config.vars_lo, config.vars_hi) = parse_var_range(var_range);
  if (!scales.empty()) config.census_scales = scales;
  config.seed = seed;
  config.runs_per_cell = runs;
  config.max_nodes = max_nodes;

  const std::vector<sparsat::ExperimentRow> rows = sparsat::run_experiment(config);
  const std::string csv = sparsat::experiment_csv(rows);
  if (csv_path.empty()) {
    std::cout << csv;
  } else {
    sparsat::write_text_file(csv_path, csv);
    std::cout << "wrote " << rows.size() << " rows to " << csv_path << "\n";
  }
  return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAT/TAUT decision through sparse-oracle tree pruning"};
  app.require_subcommand(1);

  // decide
  std::string mode = "mahaney", oracle = "tally", formula, file, trace_path, dot_path;
  CLI::App* decide = app.add_subcommand("decide", "decide one formula");
  decide->add_option("--mode", mode, "mahaney|fortune|onett")->capture_default_str();
  decide->add_option("--oracle", oracle, "tally|fingerprint|broken|taut|pclose")
      ->capture_default_str();
  decide->add_option("--formula", formula, "formula text");
  decide->add_option("--file", file, "file with one formula line");
  decide->add_option("--trace", trace_path, "write the trace JSON here");
  decide->add_option("--dot", dot_path, "write the trace DOT graph here");

  // verify
  std::string v_oracle = "tally", v_json;
  int v_max_vars = 3, v_max_nodes = 9;
  CLI::App* verify = app.add_subcommand("verify", "check an oracle over an enumerated corpus");
  verify->add_option("--oracle", v_oracle)->capture_default_str();
  verify->add_option("--max-vars", v_max_vars)->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--max-nodes", v_max_nodes)->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--json", v_json, "write the JSON report here");

  // corpus
  int c_max_vars = 3, c_max_nodes = 9;
  CLI::App* corpus = app.add_subcommand("corpus", "print the enumerated formula corpus");
  corpus->add_option("--max-vars", c_max_vars)->check(CLI::PositiveNumber)
      ->capture_default_str();
  corpus->add_option("--max-nodes", c_max_nodes)->check(CLI::PositiveNumber)
      ->capture_default_str();

  // apt
  std::string a_decider = "demo", a_json;
  int a_max_vars = 3, a_max_nodes = 9;
  CLI::App* apt = app.add_subcommand("apt", "build and validate the slow-set reduction");
  apt->add_option("--decider", a_decider, "demo|fast")->capture_default_str();
  apt->add_option("--max-vars", a_max_vars)->check(CLI::PositiveNumber)->capture_default_str();
  apt->add_option("--max-nodes", a_max_nodes)->check(CLI::PositiveNumber)
      ->capture_default_str();
  apt->add_option("--json", a_json, "write the JSON report here");

  // experiment
  std::string e_oracle = "tally", e_vars = "2..6", e_csv;
  std::vector<std::uint64_t> e_scales;
  std::uint64_t e_seed = 0;
  unsigned e_runs = 5;
  int e_max_nodes = 15;
  CLI::App* experiment =
      app.add_subcommand("experiment", "census-scaling sweep, one CSV row per run");
  experiment->add_option("--oracle", e_oracle)->capture_default_str();
  experiment->add_option("--vars", e_vars, "variable range, e.g. 2..6")->capture_default_str();
  experiment->add_option("--census-scale", e_scales, "census multipliers, e.g. 1,2,4")
      ->delimiter(',');
  experiment->add_option("--csv", e_csv, "output CSV path (stdout when omitted)");
  experiment->add_option("--seed", e_seed)->capture_default_str();
  experiment->add_option("--runs", e_runs, "formulas per (vars, scale) cell")
      ->check(CLI::PositiveNumber)->capture_default_str();
  experiment->add_option("--max-nodes", e_max_nodes)->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (decide->parsed())
      return cmd_decide(mode, oracle, formula, file, trace_path, dot_path);
    if (verify->parsed()) return cmd_verify(v_oracle, v_max_vars, v_max_nodes, v_json);
    if (corpus->parsed()) return cmd_corpus(c_max_vars, c_max_nodes);
    if (apt->parsed()) return cmd_apt(a_decider, a_max_vars, a_max_nodes, a_json);
    if (experiment->parsed())
      return cmd_experiment(e_oracle, e_vars, e_scales, e_csv, e_seed, e_runs, e_max_nodes);
  } catch (const sparsat::ParseError& e) {
    std::cerr << "formula error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
