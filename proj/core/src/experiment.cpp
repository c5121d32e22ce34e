#include "sparsat/experiment.hpp"

#include <ostream>
#include <sstream>

#include "sparsat/random_formula.hpp"

namespace sparsat {

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  if (config.vars_lo < 1 || config.vars_lo > config.vars_hi)
    throw std::invalid_argument("experiment: bad variable range");
  if (config.census_scales.empty())
    throw std::invalid_argument("experiment: need at least one census scale");
  if (config.runs_per_cell < 1) throw std::invalid_argument("experiment: runs must be >= 1");

  const ReductionOracle base = oracle_by_name(config.oracle);
  if (base.direction() != ReductionDirection::Sat)
    throw std::invalid_argument("experiment: oracle must have SAT direction");

  std::vector<ExperimentRow> rows;
  for (unsigned n_vars = config.vars_lo; n_vars <= config.vars_hi; ++n_vars) {
    // Same formulas for every scale: the draw depends on (seed, n_vars, run)
    // only, which is what makes per-formula cross-scale comparisons meaningful.
    RandomFormulaSource source(n_vars, config.max_nodes);
    std::vector<Formula> formulas;
    std::mt19937_64 rng(config.seed ^ (std::uint64_t{n_vars} << 32));
    for (unsigned run = 0; run < config.runs_per_cell; ++run)
      formulas.push_back(source.draw(rng));

    for (std::uint64_t scale : config.census_scales) {
      const ReductionOracle oracle = base.with_scaled_census(scale);
      for (unsigned run = 0; run < config.runs_per_cell; ++run) {
        const Formula& f = formulas[run];
        DecideResult result = decide_sat_mahaney(f, oracle);
        ExperimentRow row;
        row.n_vars = n_vars;
        row.root_length = f.length();
        row.census_scale = scale;
        row.t_value = result.trace.t_value;
        row.width_cap = result.trace.width_cap;
        row.query_count = result.trace.query_count;
        row.outcome = result.trace.outcome;
        row.agrees = result.accepted == brute_force_sat(f);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  write_experiment_csv(rows, out);
  return out.str();
}

void write_experiment_csv(const std::vector<ExperimentRow>& rows, std::ostream& out) {
  out << kExperimentCsvHeader << "\n";
  for (const ExperimentRow& r : rows) {
    out << r.n_vars << ',' << r.root_length << ',' << r.census_scale << ',' << r.t_value << ','
        << r.width_cap << ',' << r.query_count << ',' << to_string(r.outcome) << ','
        << (r.agrees ? "true" : "false") << "\n";
  }
}

}  // namespace sparsat
