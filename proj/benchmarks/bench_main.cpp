#include <benchmark/benchmark.h>

#include "torsionlab/heat.hpp"
#include "torsionlab/oracle.hpp"
#include "torsionlab/series.hpp"
#include "torsionlab/spectrum.hpp"
#include "torsionlab/torsion.hpp"

namespace {

using namespace torsionlab;

void BM_HyperSum(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyper_sum(Kernel::Coth, Parity::Odd, 1.5707963267948966).value);
  }
}
BENCHMARK(BM_HyperSum);

void BM_EnumerateSpectrum(benchmark::State& state) {
  const Region c1 = chapman_pair().first;
  const Rational bound(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_spectrum(c1, bound).count());
}
BENCHMARK(BM_EnumerateSpectrum)->Arg(100)->Arg(1000);

void BM_PoissonSolve(benchmark::State& state) {
  const Shape tri = Shape::triangle(1.0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(torsion_fdm(poisson_solve(tri, n)));
}
BENCHMARK(BM_PoissonSolve)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SpectralTorsion(benchmark::State& state) {
  const Region c1 = chapman_pair().first;
  for (auto _ : state) {
    benchmark::DoNotOptimize(torsion_spectral(c1, Rational(2000), CoefficientSource::Exact).value);
  }
}
BENCHMARK(BM_SpectralTorsion)->Unit(benchmark::kMillisecond);

void BM_HeatContent(benchmark::State& state) {
  const HeatSpectrum heat(chapman_pair().first, Rational(2000), CoefficientSource::Exact);
  for (auto _ : state) benchmark::DoNotOptimize(heat.content(0.01));
}
BENCHMARK(BM_HeatContent);

}  // namespace

BENCHMARK_MAIN();
