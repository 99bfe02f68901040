#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mkdvlab/errors.hpp"
#include "mkdvlab/grid.hpp"
#include "mkdvlab/littlewood_paley.hpp"
#include "mkdvlab/norms.hpp"
#include "mkdvlab/symbol.hpp"
#include "test_support.hpp"

using namespace mkdv;
using mkdv::testing::modes;
using mkdv::testing::random_modes;

namespace {
const double kPi = std::numbers::pi;
}

TEST(Grid, WavenumberLayoutAndIndexRoundTrip) {
  const GridSpec g(2.0 * kPi, 16);
  EXPECT_EQ(g.wavenumber(0), 0);
  EXPECT_EQ(g.wavenumber(7), 7);
  EXPECT_EQ(g.wavenumber(8), -8);
  EXPECT_EQ(g.wavenumber(15), -1);
  for (int k = -7; k <= 7; ++k) EXPECT_EQ(g.wavenumber(g.index_of(k)), k);
  EXPECT_EQ(g.index_of(8), -1);
  EXPECT_EQ(g.index_of(-8), -1);
  EXPECT_DOUBLE_EQ(g.xi_max(), 7.0);
}

TEST(Grid, ForwardTransformMatchesNaiveSum) {
  const GridSpec g(10.0, 32);
  RealField u(g);
  Rng rng(3);
  for (double& v : u.samples) v = rng.normal();
  const SpectralField fast = dft(u);
  const auto slow = mkdv::testing::naive_dft(u);
  for (int i = 0; i < g.size(); ++i) {
    if (i == g.nyquist_index()) {
      EXPECT_EQ(fast.coeffs[static_cast<size_t>(i)], Complex{});
      continue;
    }
    EXPECT_NEAR(std::abs(fast.coeffs[static_cast<size_t>(i)] - slow[static_cast<size_t>(i)]), 0.0, 1e-12);
  }
}

TEST(Grid, InverseRoundTripAndParseval) {
  const GridSpec g(7.0, 64);
  const SpectralField s = random_modes(g, 20, 11);
  const RealField u = idft(s);
  const SpectralField back = dft(u);
  for (size_t i = 0; i < s.coeffs.size(); ++i) EXPECT_NEAR(std::abs(back.coeffs[i] - s.coeffs[i]), 0.0, 1e-12);
  EXPECT_NEAR(l2_norm(u), l2_norm(s), 1e-12 * l2_norm(s));
  EXPECT_LT(hermitian_residual(back), 1e-14);
}

TEST(Grid, SingleCosineHasExpectedCoefficients) {
  const GridSpec g(4.0 * kPi, 64);
  RealField u(g);
  for (int j = 0; j < g.size(); ++j) u.samples[static_cast<size_t>(j)] = std::cos(3.0 * g.dxi() * g.x(j));
  const SpectralField s = dft(u);
  EXPECT_NEAR(s.at(3).real(), g.length() / 2.0, 1e-12);
  EXPECT_NEAR(s.at(-3).real(), g.length() / 2.0, 1e-12);
  EXPECT_NEAR(std::abs(s.at(2)), 0.0, 1e-12);
}

TEST(Grid, MismatchedGridsAndBadSizesAreRejected) {
  const GridSpec a(1.0, 8), b(2.0, 8);
  EXPECT_THROW(SpectralField(a) + SpectralField(b), ConfigError);
  EXPECT_THROW(RealField(a, std::vector<double>(5)), ConfigError);
  SpectralField s(a);
  EXPECT_THROW(s.set(4, 1.0), DomainError);
}

TEST(Grid, ShiftMovesSamplesCyclically) {
  const GridSpec g(1.0, 8);
  RealField u(g, {0, 1, 2, 3, 4, 5, 6, 7});
  const RealField v = shift(u, 3);
  EXPECT_EQ(v.samples[3], 0.0);
  EXPECT_EQ(v.samples[0], 5.0);
}

TEST(LittlewoodPaley, BumpProfile) {
  EXPECT_EQ(lp_bump(0.0), 1.0);
  EXPECT_EQ(lp_bump(1.0), 1.0);
  EXPECT_EQ(lp_bump(-0.7), 1.0);
  EXPECT_EQ(lp_bump(2.0), 0.0);
  EXPECT_EQ(lp_bump(3.5), 0.0);
  double prev = 1.0;
  for (double r = 1.0; r <= 2.0; r += 1e-3) {
    const double v = lp_bump(r);
    EXPECT_LE(v, prev + 1e-15);
    prev = v;
  }
  EXPECT_NEAR(lp_bump(1.5), 0.5, 1e-15);
}

TEST(LittlewoodPaley, PartitionOfUnity) {
  const LPPartition part(1.0, 200.0);
  for (double xi = -220.0; xi <= 220.0; xi += 0.37) {
    double sum = 0.0;
    for (double N : part.blocks()) {
      const double p = part.psi(N, xi);
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0 + 1e-15);
      sum += p;
    }
    EXPECT_NEAR(sum, 1.0, 1e-14) << "xi=" << xi;
  }
}

TEST(LittlewoodPaley, ProjectionsResolveTheField) {
  const GridSpec g(16.0 * kPi, 256);
  const SpectralField s = random_modes(g, 120, 5);
  const LPPartition part = LPPartition::for_grid(g, 1.0);
  SpectralField sum(g);
  for (double N : part.blocks()) sum = sum + lp_project(s, part, N);
  for (size_t i = 0; i < s.coeffs.size(); ++i) EXPECT_NEAR(std::abs(sum.coeffs[i] - s.coeffs[i]), 0.0, 1e-12);
  EXPECT_TRUE(part.has_block(8.0));
  EXPECT_FALSE(part.has_block(3.0));
}

TEST(LittlewoodPaley, IndicatorProjectionKeepsClosedBand) {
  const GridSpec g(2.0 * kPi, 32);
  const SpectralField s = random_modes(g, 15, 2);
  const SpectralField p = indicator_project(s, 3.0, 5.0);
  for (int k = -15; k <= 15; ++k) {
    const bool keep = std::abs(k) >= 3 && std::abs(k) <= 5;
    EXPECT_EQ(p.at(k), keep ? s.at(k) : Complex{});
  }
}

TEST(Norms, LebesgueNormsOfConstantsAndL2Consistency) {
  const GridSpec g(3.0, 30);
  RealField u(g, std::vector<double>(30, 2.0));
  EXPECT_NEAR(lp_norm(u, 1.0), 6.0, 1e-13);
  EXPECT_NEAR(lp_norm(u, 4.0), 2.0 * std::pow(3.0, 0.25), 1e-13);
  EXPECT_EQ(lp_norm(u, kInf), 2.0);
  EXPECT_NEAR(lp_norm(u, 2.0), l2_norm(dft(u)), 1e-13);
  EXPECT_THROW(lp_norm(u, 0.5), DomainError);
}

TEST(Norms, SobolevWeightsAgainstDirectSum) {
  const GridSpec g(2.0 * kPi, 16);
  const SpectralField s = modes(g, {{1, {1.0, 0.0}}, {3, {0.0, 2.0}}});
  // (1/L) sum (k^2 + M)^s |c|^2 over k = +-1, +-3 with L = 2 pi.
  const double M = 2.0, sp = -0.25;
  const double expect = std::sqrt((2.0 * std::pow(1.0 + M, sp) + 2.0 * 4.0 * std::pow(9.0 + M, sp)) / (2.0 * kPi));
  EXPECT_NEAR(sobolev_norm(s, sp, M), expect, 1e-14);
  EXPECT_NEAR(sobolev_norm(s, 0.0, 1.0), l2_norm(s), 1e-14);
  EXPECT_THROW(sobolev_norm(s, 0.0, 0.0), DomainError);
}

TEST(Norms, SymbolNormOfConstantSymbolIsScaledL2) {
  const GridSpec g(5.0, 64);
  const SpectralField s = random_modes(g, 20, 9);
  EXPECT_NEAR(symbol_norm(s, SymbolA::constant(4.0)), 2.0 * l2_norm(s), 1e-12);
}

TEST(Norms, BlockSobolevSumIsComparableToSobolevNorm) {
  const GridSpec g(16.0 * kPi, 512);
  const SpectralField s = random_modes(g, 200, 4);
  const LPPartition part = LPPartition::for_grid(g, 1.0);
  const double full = std::pow(sobolev_norm(s, -0.2, 1.0), 2);
  const double blocks = block_l2_sobolev_sq(s, part, -0.2);
  EXPECT_GT(blocks / full, 0.5);
  EXPECT_LT(blocks / full, 1.0 + 1e-12);
}

TEST(Norms, BernsteinRatioReportsBothExponents) {
  const GridSpec g(32.0 * kPi, 1024);
  const LPPartition part = LPPartition::for_grid(g, 1.0);
  Rng rng(8);
  const SpectralField phi = lp_project(random_block_data(g, part, 16.0, rng), part, 16.0);
  const BernsteinResult r = bernstein_ratio(idft(phi), part, 16.0, 2.0, kInf);
  EXPECT_DOUBLE_EQ(r.standard_exponent, 0.5);
  EXPECT_DOUBLE_EQ(r.printed_exponent, -0.5);
  EXPECT_TRUE(r.localized);
  // Block of width ~N in frequency: ||P_N f||_inf <= C N^{1/2} ||f||_2.
  EXPECT_LT(r.ratio, 4.0 * std::sqrt(16.0));
  EXPECT_THROW(bernstein_ratio(idft(phi), part, 16.0, 3.0, 2.0), DomainError);
}

TEST(Symbol, ANPlateauOuterFormAndClass) {
  const double N = 16.0, s = -0.125;
  const SymbolA a = make_aN(N, s, 1.0);
  EXPECT_NEAR(a(0.0), std::pow(N, 2 * s), 1e-15);
  EXPECT_NEAR(a(N), std::pow(N, 2 * s), 1e-15);
  EXPECT_NEAR(a(-N / 3), a(N / 3), 0.0);
  for (double xi : {2.0 * N, 3.0 * N, 50.0 * N})
    EXPECT_NEAR(a(xi), std::pow(N, 0.5 + 2 * s) / std::sqrt(xi), 1e-13 * a(xi));
  const SymbolClassReport rep = check_symbol_class(a, 256.0 * N);
  EXPECT_TRUE(rep.ok());
  EXPECT_GE(rep.min_log_slope, -0.5 - 1e-6);
  EXPECT_LE(rep.max_log_slope, 1e-6);
}

TEST(Symbol, ANRejectsBadParameters) {
  EXPECT_THROW(make_aN(0.5, -0.1, 1.0), DomainError);
  EXPECT_THROW(make_aN(4.0, 0.1, 1.0), DomainError);
  EXPECT_THROW(make_aN(4.0, -0.1, 0.5), DomainError);
}

TEST(Symbol, ClassAuditFlagsIncreasingSymbol) {
  const SymbolA bad = SymbolA::custom(1.0, [](double x) { return std::abs(x) <= 1 ? 1.0 : x * x; }, "bad");
  EXPECT_FALSE(check_symbol_class(bad, 100.0).ok());
}
