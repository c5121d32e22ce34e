#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sparsat/engine.hpp"

namespace sparsat {

/// One decide run of the census-scaling sweep.
struct ExperimentRow {
  unsigned n_vars = 0;
  std::size_t root_length = 0;
  std::uint64_t census_scale = 1;
  std::uint64_t t_value = 0;
  std::uint64_t width_cap = 0;
  std::uint64_t query_count = 0;
  Outcome outcome = Outcome::Reject;
  bool agrees = false;
};

struct ExperimentConfig {
  std::string oracle = "tally";
  unsigned vars_lo = 2;
  unsigned vars_hi = 6;
  std::vector<std::uint64_t> census_scales = {1, 2, 4};
  unsigned runs_per_cell = 5;
  int max_nodes = 15;
  std::uint64_t seed = 0;
};

/// Runs decide_sat_mahaney over seeded random formulas with the oracle's
/// census bound multiplied by each scale. Formulas are drawn per
/// (n_vars, run) independently of the scale, so rows with the same n_vars
/// and run index across scales use the same formula. Rows are emitted in
/// (n_vars, scale, run) order.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

inline constexpr std::string_view kExperimentCsvHeader =
    "n_vars,root_length,census_scale,t_value,width_cap,query_count,outcome,agrees";

std::string experiment_csv(const std::vector<ExperimentRow>& rows);
void write_experiment_csv(const std::vector<ExperimentRow>& rows, std::ostream& out);

}  // namespace sparsat
