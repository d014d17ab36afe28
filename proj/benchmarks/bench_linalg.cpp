#include <benchmark/benchmark.h>

#include "supervar/linalg.hpp"
#include "supervar/rng.hpp"

using namespace supervar;

namespace {

SparseMatrix random_sparse(int rows, int cols, uint64_t seed) {
  SplitMix64 rng(seed);
  SparseMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng.below(4) == 0) m.set(r, c, rng.any_rat());
  return m;
}

}  // namespace

static void BM_RankExact(benchmark::State& state) {
  auto m = random_sparse(static_cast<int>(state.range(0)),
                         static_cast<int>(state.range(0)) + 10, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, RankMode::exact));
}
BENCHMARK(BM_RankExact)->Arg(20)->Arg(60)->Arg(120);

static void BM_RankModular(benchmark::State& state) {
  auto m = random_sparse(static_cast<int>(state.range(0)),
                         static_cast<int>(state.range(0)) + 10, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, RankMode::modular));
}
BENCHMARK(BM_RankModular)->Arg(20)->Arg(60)->Arg(120)->Arg(400);

static void BM_KernelBasis(benchmark::State& state) {
  auto m = random_sparse(40, 60, 11);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis);

BENCHMARK_MAIN();
