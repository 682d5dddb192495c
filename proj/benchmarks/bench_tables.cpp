#include <benchmark/benchmark.h>

#include "arealab/tables.hpp"

using namespace arealab;

static void BM_SieveDivisor(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(FunctionKind::divisor(), limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SieveDivisor)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_SieveVonMangoldt(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(FunctionKind::von_mangoldt(), limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SieveVonMangoldt)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

// Segment size against thread count at a fixed limit.
static void BM_SieveSegmented(benchmark::State& state) {
  BuildOptions opts;
  opts.segment_size = static_cast<std::uint64_t>(state.range(0));
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(FunctionKind::euler_phi(), 10'000'000, 0, opts));
}
BENCHMARK(BM_SieveSegmented)
    ->ArgsProduct({{1 << 16, 1 << 20, 1 << 26}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

static void BM_PrefixSums(benchmark::State& state) {
  const auto table = build_table(FunctionKind::master_upsilon(), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(prefix_sums(table));
}
BENCHMARK(BM_PrefixSums)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);
