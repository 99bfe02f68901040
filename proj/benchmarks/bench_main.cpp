#include <benchmark/benchmark.h>

#include <numbers>

#include "mkdvlab/b4.hpp"
#include "mkdvlab/energy.hpp"
#include "mkdvlab/grid.hpp"
#include "mkdvlab/nonlinear.hpp"
#include "mkdvlab/random_data.hpp"
#include "mkdvlab/solver.hpp"
#include "mkdvlab/variation.hpp"

using namespace mkdv;

namespace {

const double kPi = std::numbers::pi;

SpectralField band_limited(const GridSpec& g, int kmax, std::uint64_t seed) {
  Rng rng(seed);
  SpectralField s(g);
  for (int k = 1; k <= kmax; ++k) {
    const Complex c = 0.1 * rng.complex_normal();
    s.set(k, c);
    s.set(-k, std::conj(c));
  }
  return s;
}

void BM_RealFft(benchmark::State& state) {
  const GridSpec g(64.0 * kPi, static_cast<int>(state.range(0)));
  const RealField u = idft(band_limited(g, g.size() / 4, 1));
  for (auto _ : state) benchmark::DoNotOptimize(dft(u));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RealFft)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

void BM_B4Stable(benchmark::State& state) {
  const B4Evaluator q(make_aN(16.0, -0.125, 1.0), 1.0);
  Rng rng(2);
  std::vector<std::array<double, 3>> pts(4096);
  for (auto& p : pts) p = {rng.uniform(-256, 256), rng.uniform(-256, 256), rng.uniform(-256, 256)};
  size_t i = 0;
  for (auto _ : state) {
    const auto& p = pts[i++ & 4095];
    benchmark::DoNotOptimize(q.core_stable(p[0], p[1], p[2]));
  }
}
BENCHMARK(BM_B4Stable);

void BM_B4NearSingular(benchmark::State& state) {
  const B4Evaluator q(make_aN(16.0, -0.125, 1.0), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(q.core_stable(40.0, -40.0 + 1e-9, 13.5));
}
BENCHMARK(BM_B4NearSingular);

void BM_EnergyE1(benchmark::State& state) {
  const GridSpec g(16.0 * kPi, 256);
  const SpectralField u = band_limited(g, static_cast<int>(state.range(0)), 3);
  const B4Evaluator b = make_flow_b4(make_aN(4.0, -0.125, 1.0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(energy_E1(u, b));
  state.SetComplexityN(2 * state.range(0));
}
BENCHMARK(BM_EnergyE1)->RangeMultiplier(2)->Range(8, 64)->Complexity(benchmark::oNCubed);

void BM_ExactCube(benchmark::State& state) {
  const GridSpec g(64.0 * kPi, static_cast<int>(state.range(0)));
  const SpectralField u = band_limited(g, dealias_cutoff(g), 4);
  for (auto _ : state) benchmark::DoNotOptimize(exact_cube_spectrum(u));
}
BENCHMARK(BM_ExactCube)->RangeMultiplier(4)->Range(256, 16384);

void BM_SolverStep(benchmark::State& state) {
  SolverConfig c;
  c.grid = GridSpec(64.0 * kPi, static_cast<int>(state.range(0)));
  c.dt = 1e-4;
  const RealField u0 = gaussian_profile(c.grid, 1.0, c.grid.length() / 2, 2.0);
  MkdvStepper stepper(c);
  SpectralField s = stepper.project(dft(u0));
  for (auto _ : state) {
    stepper.advance(s);
    benchmark::DoNotOptimize(s.coeffs.data());
  }
}
BENCHMARK(BM_SolverStep)->RangeMultiplier(4)->Range(256, 4096);

void BM_VariationDp(benchmark::State& state) {
  const GridSpec g(2.0 * kPi, 16);
  PathSample p;
  for (int i = 0; i <= state.range(0); ++i) {
    p.times.push_back(i);
    p.values.push_back(band_limited(g, 3, static_cast<std::uint64_t>(i) + 10));
  }
  for (auto _ : state) benchmark::DoNotOptimize(variation_norm(p, 2.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VariationDp)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
