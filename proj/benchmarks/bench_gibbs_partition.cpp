#include <benchmark/benchmark.h>

#include <string>

#include "gibbs_partition/gibbs_partition.hpp"

namespace {

using namespace gibbs;

GibbsModel grid(int side) { return resolve_model("grid-" + std::to_string(side) + "x" + std::to_string(side)); }

void BM_ExactDraw(benchmark::State& state) {
  const auto oracle = SamplerOracle::exact(grid(static_cast<int>(state.range(0))));
  Engine rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.draw(0.7, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExactDraw)->Arg(2)->Arg(3)->Arg(4);

void BM_McmcDraw(benchmark::State& state) {
  const auto oracle = SamplerOracle::mcmc(grid(4), static_cast<int>(state.range(0)), 0.0);
  Engine rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.draw(0.7, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_McmcDraw)->Arg(10)->Arg(100);

void BM_TpaRun(benchmark::State& state) {
  const auto oracle = SamplerOracle::exact(grid(static_cast<int>(state.range(0))));
  Engine rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(tpa_run(oracle, 1.0, rng).points.size());
}
BENCHMARK(BM_TpaRun)->Arg(2)->Arg(3)->Arg(4);

void BM_PairedReplicate(benchmark::State& state) {
  const auto oracle = SamplerOracle::exact(grid(3));
  std::vector<double> betas;
  const auto points = state.range(0);
  for (int i = 0; i <= points; ++i) betas.push_back(static_cast<double>(i) / static_cast<double>(points));
  const CoolingSchedule schedule(betas);
  Engine rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(paired_replicate(schedule, oracle, rng).log_w);
  state.SetItemsProcessed(state.iterations() * (points + 1));
}
BENCHMARK(BM_PairedReplicate)->Arg(4)->Arg(32);

void BM_LogPartitionExact(benchmark::State& state) {
  const auto spectrum = energy_spectrum(grid(4));
  double b = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_partition(spectrum, b));
    b = b > 2.0 ? 0.0 : b + 1e-3;
  }
}
BENCHMARK(BM_LogPartitionExact);

void BM_PairedEstimate(benchmark::State& state) {
  const auto oracle = SamplerOracle::exact(resolve_model("cycle-4"));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(paired_product_estimate(oracle, 1.0, 0.25, ++seed).log_ratio_estimate);
}
BENCHMARK(BM_PairedEstimate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
