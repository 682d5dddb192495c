#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "arealab/area_identity.hpp"
#include "arealab/correlation.hpp"

using namespace arealab;

static void BM_BilinearRhs(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  const auto table = build_table(FunctionKind::divisor(), x);
  for (auto _ : state) benchmark::DoNotOptimize(bilinear_rhs(table, x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BilinearRhs)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oN);

// The quadratic double sum the bilinear form replaces.
static void BM_DoubleSumOracle(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  const auto table = build_table(FunctionKind::divisor(), x);
  for (auto _ : state) benchmark::DoNotOptimize(double_sum_lhs_oracle(table, x, x, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DoubleSumOracle)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oNSquared);

static void BM_Type1(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  const auto table = build_table(FunctionKind::von_mangoldt(), x, 2);
  for (auto _ : state) benchmark::DoNotOptimize(type1(table, x, 2));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Type1)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000);

static void BM_Type1Sweep(benchmark::State& state) {
  constexpr std::uint64_t x = 1'000'000;
  std::vector<std::uint64_t> shifts(64);
  std::iota(shifts.begin(), shifts.end(), 1);
  const auto table = build_table(FunctionKind::von_mangoldt(), x, shifts.back());
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(type1_sweep(table, x, shifts, threads));
}
BENCHMARK(BM_Type1Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Type2(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  const auto table = build_table(FunctionKind::von_mangoldt(), x);
  for (auto _ : state) benchmark::DoNotOptimize(type2(table, x));
}
BENCHMARK(BM_Type2)->Arg(1'000'000)->Arg(10'000'000);
