#include <benchmark/benchmark.h>

#include <cmath>

#include "peakonlab/conslaws.hpp"
#include "peakonlab/fourier_field.hpp"
#include "peakonlab/operators.hpp"
#include "peakonlab/pde.hpp"
#include "peakonlab/solutions.hpp"

using namespace pklab;

namespace {

GridState gaussian_grid(std::size_t n) {
  GridState g = make_grid(20.0, n, true);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = g.x(i);
    g.samples[i] = std::exp(-x * x);
  }
  return g;
}

void BM_HelmholtzSweep(benchmark::State& state) {
  const GridState g = gaussian_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(helmholtz_inverse(g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HelmholtzSweep)->Range(1 << 10, 1 << 16);

void BM_HelmholtzFFT(benchmark::State& state) {
  const GridState g = gaussian_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(helmholtz_inverse_fft(g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HelmholtzFFT)->Range(1 << 10, 1 << 16);

void BM_SpectralRhs(benchmark::State& state) {
  const GridState g = gaussian_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(rhs_nonlocal(g, NonlocalEq::Novikov16));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SpectralRhs)->Range(1 << 10, 1 << 14);

void BM_QuantityField(benchmark::State& state) {
  FieldPtr f = instantiate(collage(6.0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        quantity(QuantityIndex::H2, *f, 0.0, 40.0,
                 static_cast<std::size_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_QuantityField)->Range(1 << 12, 1 << 14);

void BM_ConslawResidual(benchmark::State& state) {
  const FourierField f = FourierField::random(7);
  const int law = static_cast<int>(state.range(0));
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(identity_residual(law, f, x, 0.3));
    x += 1e-3;
    if (x > 3.0) x = -3.0;
  }
}
BENCHMARK(BM_ConslawResidual)->DenseRange(1, 5);

}  // namespace

BENCHMARK_MAIN();
