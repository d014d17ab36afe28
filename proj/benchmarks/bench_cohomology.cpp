#include <benchmark/benchmark.h>

#include "supervar/cohomology.hpp"
#include "supervar/detecting.hpp"

using namespace supervar;

namespace {

std::shared_ptr<const LieSuperalgebra> detecting_e(Family f,
                                                   std::vector<int> p) {
  auto g = std::make_shared<const LieSuperalgebra>(build(f, std::move(p)));
  return std::make_shared<const LieSuperalgebra>(
      assemble_detecting(g, Detecting::E).first);
}

}  // namespace

static void BM_ComplexGL21Natural(benchmark::State& state) {
  auto g = std::make_shared<const LieSuperalgebra>(build(Family::GL, {2, 1}));
  auto nat = natural_module(g);
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CochainComplex cx(g, nat, D);
    benchmark::DoNotOptimize(cx.cohomology_dims());
  }
}
BENCHMARK(BM_ComplexGL21Natural)->Arg(4)->Arg(8);

static void BM_AnnihilatorE22(benchmark::State& state) {
  auto e = detecting_e(Family::GL, {2, 2});
  auto reg = regular_induced(e, Vec(e->even_indices().size(), Rat(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(annihilator_truncated(e, reg, 6));
}
BENCHMARK(BM_AnnihilatorE22);

static void BM_DetectOSP32(benchmark::State& state) {
  auto g = std::make_shared<const LieSuperalgebra>(build(Family::OSP, {3, 2}));
  for (auto _ : state)
    benchmark::DoNotOptimize(assemble_detecting(g, Detecting::E));
}
BENCHMARK(BM_DetectOSP32);
