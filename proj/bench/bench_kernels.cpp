// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "wente/jacobi_operator.hpp"
#include "wente/spectral_oracle.hpp"

using namespace wente;

namespace {

const Surface& surface(int ell, int n) {
  static const Surface s32 = make_surface(Fraction(3, 2), 0.5);
  static const Surface s169 = make_surface(Fraction(16, 9), 0.5);
  return ell == 3 ? s32 : s169;
}

Execution exec_of(const benchmark::State& state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

void BM_DirectAssembly(benchmark::State& state) {
  const Surface& s = surface(3, 2);
  const PotentialContext ctx(s);
  const Table1Basis basis(s.frac, s.period.x_len, s.period.y_len);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_matrix_direct(ctx, basis, {}, exec_of(state)));
}

void BM_BasicIntegrals(benchmark::State& state) {
  const Surface& s = surface(16, 9);
  const PotentialContext ctx(s);
  const auto labels = table4_integrals(s.frac);
  for (auto _ : state) benchmark::DoNotOptimize(basic_integrals(ctx, labels, {}, exec_of(state)));
}

void BM_Galerkin(benchmark::State& state) {
  const Surface& s = surface(16, 9);
  const PotentialContext ctx(s);
  const int cutoff = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_galerkin(ctx, cutoff, {}, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_DirectAssembly)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BasicIntegrals)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Galerkin)->ArgNames({"parallel", "cutoff"})->ArgsProduct({{0, 1}, {4, 6}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
