#include <benchmark/benchmark.h>

#include "sparsat/engine.hpp"
#include "sparsat/formula.hpp"
#include "sparsat/oracles.hpp"
#include "sparsat/trace_io.hpp"

namespace {

using namespace sparsat;

// Conjunction chain x1 & x2 & ... & xk, parenthesized as the grammar needs.
Formula var_chain(unsigned vars) {
  Formula acc = Formula::variable(1);
  for (unsigned v = 2; v <= vars; ++v) {
    if (acc.kind() == Formula::Kind::And || acc.kind() == Formula::Kind::Or)
      acc = Formula::paren(acc);
    acc = Formula::conjunction(acc, Formula::variable(v));
  }
  return acc;
}

void BM_ParseSerializeRoundtrip(benchmark::State& state) {
  const std::string text = var_chain(static_cast<unsigned>(state.range(0))).str();
  for (auto _ : state) {
    Formula f = parse_formula(text);
    benchmark::DoNotOptimize(f.str());
  }
}
BENCHMARK(BM_ParseSerializeRoundtrip)->Arg(4)->Arg(8)->Arg(16);

void BM_BruteForceSat(benchmark::State& state) {
  const Formula f = var_chain(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_sat(f));
}
BENCHMARK(BM_BruteForceSat)->Arg(8)->Arg(12)->Arg(16);

// 8-variable conjunction chain: wide enough that the tally cap is exceeded
// at level 7, so the run actually prunes.
void BM_DecideMahaneyPruning(benchmark::State& state) {
  const Formula root = var_chain(8);
  const ReductionOracle oracle = tally_reduction();
  for (auto _ : state) {
    DecideResult r = decide_sat_mahaney(root, oracle);
    benchmark::DoNotOptimize(r.trace.query_count);
  }
}
BENCHMARK(BM_DecideMahaneyPruning);

void BM_DecideFortune(benchmark::State& state) {
  const Formula root = parse_formula("(!x1|!x2)|x3");
  const ReductionOracle oracle = taut_coreduction();
  for (auto _ : state) {
    DecideResult r = decide_taut_fortune(root, oracle);
    benchmark::DoNotOptimize(r.accepted);
  }
}
BENCHMARK(BM_DecideFortune);

void BM_EnumerateFormulas(benchmark::State& state) {
  for (auto _ : state) {
    auto corpus = enumerate_formulas(3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(corpus.size());
  }
}
BENCHMARK(BM_EnumerateFormulas)->Arg(5)->Arg(6)->Arg(7);

void BM_TraceJson(benchmark::State& state) {
  const DecideResult r = decide_sat_mahaney(var_chain(8), tally_reduction());
  for (auto _ : state) benchmark::DoNotOptimize(trace_json(r.trace));
}
BENCHMARK(BM_TraceJson);

}  // namespace

BENCHMARK_MAIN();
