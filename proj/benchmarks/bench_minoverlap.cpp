#include <benchmark/benchmark.h>

#include "arealab/minoverlap.hpp"

using namespace arealab;

static void BM_ExactMinOverlap(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(exact_min_overlap(n, kDefaultExhaustiveCap, threads));
}
BENCHMARK(BM_ExactMinOverlap)
    ->ArgsProduct({{12, 16, 20, 24}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

static void BM_HeuristicMinOverlap(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_min_overlap(n, kDefaultAnnealingBudget, 0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kDefaultAnnealingBudget));
}
BENCHMARK(BM_HeuristicMinOverlap)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_DifferenceHistogram(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::string bits(n, '0');
  for (std::uint32_t i = 0; i < n; i += 2) bits[i] = '1';
  const auto s = Splitting::from_bits(bits);
  for (auto _ : state) benchmark::DoNotOptimize(difference_histogram(s));
}
BENCHMARK(BM_DifferenceHistogram)->Arg(200)->Arg(2000);
