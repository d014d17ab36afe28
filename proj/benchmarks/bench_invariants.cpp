#include <benchmark/benchmark.h>

#include "supervar/invariants.hpp"

using namespace supervar;

static void BM_BuildGL22(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build(Family::GL, {2, 2}));
}
BENCHMARK(BM_BuildGL22);

static void BM_InvariantsModular(benchmark::State& state) {
  auto a = build(Family::GL, {2, 2});
  int D = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(invariant_dimensions(a, D));
}
BENCHMARK(BM_InvariantsModular)->Arg(4)->Arg(6)->Arg(8);

static void BM_InvariantsExact(benchmark::State& state) {
  auto a = build(Family::GL, {2, 2});
  InvariantOptions opt;
  opt.mode = RankMode::exact;
  int D = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(invariant_dimensions(a, D, opt));
}
BENCHMARK(BM_InvariantsExact)->Arg(4)->Arg(6);

static void BM_InvariantsP2(benchmark::State& state) {
  auto a = build(Family::P, {3});
  for (auto _ : state) benchmark::DoNotOptimize(invariant_dimensions(a, 8));
}
BENCHMARK(BM_InvariantsP2);

static void BM_GeneratorInference(benchmark::State& state) {
  auto a = build(Family::PSL, {2});
  for (auto _ : state) benchmark::DoNotOptimize(generator_degrees(a, 6));
}
BENCHMARK(BM_GeneratorInference);
