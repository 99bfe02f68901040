#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mkdvlab/airy.hpp"
#include "mkdvlab/b4.hpp"
#include "mkdvlab/energy.hpp"
#include "mkdvlab/errors.hpp"
#include "mkdvlab/nonlinear.hpp"
#include "mkdvlab/norms.hpp"
#include "mkdvlab/random_data.hpp"
#include "mkdvlab/solver.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mkdv;
using mkdv::testing::random_modes;

namespace {

const double kPi = std::numbers::pi;

// Values of sum_k c_k e^{i xi_k x} / L at m equispaced points, by direct summation.
std::vector<double> synthesize(const SpectralField& s, int m) {
  const GridSpec& g = s.grid;
  std::vector<double> out(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double x = g.length() * j / m;
    std::complex<long double> acc = 0.0L;
    for (int i = 0; i < g.size(); ++i) {
      const Complex c = s.coeffs[static_cast<size_t>(i)];
      if (c == Complex{}) continue;
      const long double ph = static_cast<long double>(g.xi(i)) * x;
      acc += std::complex<long double>(c.real(), c.imag()) * std::complex<long double>(std::cos(ph), std::sin(ph));
    }
    out[static_cast<size_t>(j)] = static_cast<double>(acc.real()) / g.length();
  }
  return out;
}

}  // namespace

TEST(Energy, E0IsSymbolNormSquared) {
  const GridSpec g(8.0 * kPi, 64);
  const SpectralField u = random_modes(g, 20, 1);
  const SymbolA a = make_aN(2.0, -0.125, 1.0);
  double direct = 0.0;
  for (int i = 0; i < g.size(); ++i) direct += a(g.xi(i)) * std::norm(u.coeffs[static_cast<size_t>(i)]);
  EXPECT_NEAR(energy_E0(u, a), direct / g.length(), 1e-13 * energy_E0(u, a));
  EXPECT_NEAR(energy_E0(idft(u), a), energy_E0(u, a), 1e-12 * energy_E0(u, a));
}

TEST(Energy, R4MatchesPhysicalSpacePairing) {
  const GridSpec g(6.0 * kPi, 64);
  const SpectralField u = random_modes(g, 12, 3, 0.2);
  const SymbolA a = make_aN(2.0, -0.125, 1.0);
  const SpectralField v = apply_multiplier(u, [&](double xi) { return Complex(0.0, xi * a(xi)); });
  const int m = 4 * g.size();
  const auto us = synthesize(u, m);
  const auto vs = synthesize(v, m);
  double pairing = 0.0;
  for (int j = 0; j < m; ++j) {
    const double uj = us[static_cast<size_t>(j)];
    pairing += vs[static_cast<size_t>(j)] * uj * uj * uj;
  }
  pairing *= g.length() / m;
  for (int sign : {1, -1}) {
    const double r4 = remainder_R4(u, a, sign);
    EXPECT_NEAR(r4, 2.0 * sign * pairing, 1e-11 * std::abs(r4));
  }
}

TEST(Energy, E1TripleSumMatchesFourFoldEnumeration) {
  const GridSpec g(4.0 * kPi, 32);
  const SpectralField u = random_modes(g, 4, 7);  // eight active modes
  for (double N : {1.0, 2.0}) {
    const B4Evaluator b = make_flow_b4(make_aN(N, -0.125, 1.0), 1);
    const MultilinearValue e = energy_E1_detailed(u, b);
    EXPECT_EQ(e.active, 8);
    const double expect = oracle::e1_enumerated(u, b, 4);
    EXPECT_NEAR(e.value, expect, 1e-12 * std::max(1.0, std::abs(expect)));
    EXPECT_LT(e.imag_residual, 1e-12);
  }
}

TEST(Energy, R6QuarticFormMatchesSixFoldEnumeration) {
  const GridSpec g(4.0 * kPi, 32);
  const SpectralField u = random_modes(g, 3, 8);  // six active modes
  const B4Evaluator b = make_flow_b4(make_aN(1.0, -0.125, 1.0), 1);
  for (int sign : {1, -1}) {
    const double r6 = remainder_R6(u, make_flow_b4(make_aN(1.0, -0.125, 1.0), sign), sign, true);
    const double expect = oracle::r6_enumerated(u, make_flow_b4(make_aN(1.0, -0.125, 1.0), sign), sign, 3);
    EXPECT_NEAR(r6, expect, 1e-11 * std::max(1.0, std::abs(expect)));
  }
  EXPECT_NE(remainder_R6(u, b, 1), 0.0);
}

TEST(Energy, Homogeneity) {
  const GridSpec g(8.0 * kPi, 64);
  const SpectralField u = random_modes(g, 12, 2, 0.3);
  const SymbolA a = make_aN(1.0, -0.125, 1.0);
  const B4Evaluator b = make_flow_b4(a, 1);
  const double lam = 1.7;
  const SpectralField v = lam * u;
  EXPECT_NEAR(energy_E0(v, a), std::pow(lam, 2) * energy_E0(u, a), 1e-12 * energy_E0(v, a));
  EXPECT_NEAR(remainder_R4(v, a, 1), std::pow(lam, 4) * remainder_R4(u, a, 1), 1e-11 * std::abs(remainder_R4(v, a, 1)));
  EXPECT_NEAR(energy_E1(v, b), std::pow(lam, 4) * energy_E1(u, b), 1e-11 * std::abs(energy_E1(v, b)));
  EXPECT_NEAR(remainder_R6(v, b, 1), std::pow(lam, 6) * remainder_R6(u, b, 1), 1e-11 * std::abs(remainder_R6(v, b, 1)));
}

TEST(Energy, LinearPartOfE1DerivativeCancelsR4) {
  // Along the free Airy flow, d/dt E_1 = -R_4: the defining property of b_4.
  const GridSpec g(8.0 * kPi, 64);
  const SpectralField u = random_modes(g, 10, 6, 0.5);
  for (int sign : {1, -1}) {
    const SymbolA a = make_aN(2.0, -0.125, 1.0);
    const B4Evaluator b = make_flow_b4(a, sign);
    const double h = 1e-4;
    const double d = (energy_E1(airy_propagate(u, h), b) - energy_E1(airy_propagate(u, -h), b)) / (2 * h);
    const double r4 = remainder_R4(u, a, sign);
    EXPECT_NEAR(d, -r4, 1e-6 * std::abs(r4));
  }
}

TEST(Energy, BudgetErrorReportsRequiredModes) {
  const GridSpec g(64.0 * kPi, 4096);
  const SpectralField u = random_modes(g, 600, 4);
  const B4Evaluator b = make_flow_b4(make_aN(1.0, -0.125, 1.0), 1);
  try {
    energy_E1(u, b);
    FAIL() << "expected BudgetError";
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.required_active(), 1200);
    EXPECT_EQ(e.allowed_active(), kMaxActiveModes);
  }
}

TEST(Energy, BoundProbeIsFiniteAndScaleFree) {
  const GridSpec g(8.0 * kPi, 64);
  const SpectralField u = random_modes(g, 12, 10, 0.2);
  const B4Evaluator b = make_flow_b4(make_aN(2.0, -0.125, 1.0), 1);
  const double p = e1_bound_probe(u, b, 1.0);
  EXPECT_GT(p, 0.0);
  EXPECT_NEAR(e1_bound_probe(3.0 * u, b, 1.0), p, 1e-11 * p);
  EXPECT_EQ(e1_bound_probe(SpectralField(g), b, 1.0), 0.0);
}

TEST(Energy, IdentitiesAlongTheFlow) {
  SolverConfig cfg;
  cfg.grid = GridSpec(16.0 * kPi, 64);
  cfg.dt = 1e-4;
  cfg.horizon = 0.004;
  const RealField u0 = gaussian_profile(cfg.grid, 0.3, cfg.grid.length() / 2, 2.0);
  const FlowRecord flow = solve(u0, cfg);
  const B4Evaluator b = make_flow_b4(make_aN(1.0, -0.125, 1.0), 1);
  IdentityOptions opt;
  opt.fd_steps = {1e-3, 5e-4};
  const IdentityReport r4 = energy_identity_check(flow, b, IdentityKind::E0_R4, 1, opt);
  ASSERT_EQ(r4.rows.size(), 2u);
  EXPECT_LE(r4.rows[0].max_rel, 1e-5);
  // Small grid and short horizon: the observed order sits a little below the asymptotic 2.
  EXPECT_GE(r4.order, 1.8);
  const IdentityReport r6 = energy_identity_check(flow, b, IdentityKind::E0E1_R6, 1, opt);
  EXPECT_LE(r6.rows[0].max_rel, 1e-4);
  opt.fd_steps = {1.5e-4};
  EXPECT_THROW(energy_identity_check(flow, b, IdentityKind::E0_R4, 1, opt), ConfigError);
}

TEST(Energy, ReportStrideAndTags) {
  SolverConfig cfg;
  cfg.grid = GridSpec(16.0 * kPi, 64);
  cfg.dt = 1e-3;
  cfg.horizon = 0.01;
  const FlowRecord flow = solve(gaussian_profile(cfg.grid, 0.3, 20.0, 2.0), cfg);
  const B4Evaluator b = make_flow_b4(make_aN(1.0, -0.125, 1.0), 1);
  const EnergyReport rep = energy_report(flow, b, 1, 5);
  ASSERT_EQ(rep.samples.size(), 3u);
  EXPECT_EQ(rep.samples[1].t, flow.times[5]);
  EXPECT_EQ(rep.symbol_tag, b.symbol().tag());
}

TEST(Nonlinear, ExactCubeMatchesConvolution) {
  const GridSpec g(2.0 * kPi, 32);
  const SpectralField u = random_modes(g, 5, 12);
  const SpectralField w = exact_cube_spectrum(u);
  const double L = g.length();
  for (int k = -15; k <= 15; ++k) {
    Complex acc = 0.0;
    for (int a = -5; a <= 5; ++a)
      for (int b = -5; b <= 5; ++b) acc += u.at(a) * u.at(b) * u.at(k - a - b);
    EXPECT_NEAR(std::abs(w.at(k) - acc / (L * L)), 0.0, 1e-12 * std::abs(acc / (L * L)) + 1e-13);
  }
  EXPECT_EQ(dealias_cutoff(g), 10);
  const SpectralField t = truncate_two_thirds(random_modes(g, 15, 1));
  EXPECT_EQ(t.at(11), Complex{});
  EXPECT_NE(t.at(10), Complex{});
}
