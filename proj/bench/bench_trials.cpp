#include <benchmark/benchmark.h>

#include "toricleak/reference_sim.hpp"
#include "toricleak/sim_engine.hpp"

using namespace toricleak;

namespace {

ExperimentConfig depolarizing_point(int d, std::int64_t trials) {
  ExperimentConfig c;
  c.distance = d;
  c.trials = trials;
  c.noise = NoiseModel::depolarizing;
  c.p_scatter = 1e-3;
  c.seed = 7;
  return c;
}

void BM_Engine(benchmark::State& state) {
  const auto config = depolarizing_point(static_cast<int>(state.range(0)), 1000);
  RunOptions opts;
  opts.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(config, opts).failures);
  state.SetItemsProcessed(state.iterations() * config.trials);
}

void BM_Reference(benchmark::State& state) {
  const auto config = depolarizing_point(static_cast<int>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(run_reference(config).failures);
  state.SetItemsProcessed(state.iterations() * config.trials);
}

void BM_HyperfineLrc(benchmark::State& state) {
  ExperimentConfig c;
  c.distance = static_cast<int>(state.range(0));
  c.trials = 1000;
  c.isotope = IsotopeProfile::hyperfine();
  c.lrc_enabled = true;
  c.p_scatter = 1e-3;
  c.sigma_b_gauss = 1e-5;
  RunOptions opts;
  opts.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(c, opts).failures);
  state.SetItemsProcessed(state.iterations() * c.trials);
}

}  // namespace

BENCHMARK(BM_Engine)->Args({3, 1})->Args({5, 1})->Args({5, 0})->Args({7, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reference)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HyperfineLrc)->Args({5, 0})->Args({7, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
