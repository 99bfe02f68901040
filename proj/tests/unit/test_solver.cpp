#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "mkdvlab/airy.hpp"
#include "mkdvlab/errors.hpp"
#include "mkdvlab/nonlinear.hpp"
#include "mkdvlab/norms.hpp"
#include "mkdvlab/persistence.hpp"
#include "mkdvlab/random_data.hpp"
#include "mkdvlab/solver.hpp"
#include "test_support.hpp"

using namespace mkdv;

namespace {

const double kPi = std::numbers::pi;

SolverConfig small_config(double dt, double horizon) {
  SolverConfig c;
  c.grid = GridSpec(16.0 * kPi, 64);
  c.dt = dt;
  c.horizon = horizon;
  c.record_stride = 1000000;
  return c;
}

RealField final_state(const RealField& u0, const SolverConfig& c) { return solve(u0, c).states.back(); }

}  // namespace

TEST(Solver, StepCountRequiresIntegerRatio) {
  EXPECT_EQ(step_count(small_config(0.01, 1.0)), 100);
  EXPECT_EQ(step_count(small_config(1e-4, 0.3)), 3000);
  EXPECT_THROW(step_count(small_config(0.3, 1.0)), ConfigError);
  EXPECT_THROW(step_count(small_config(-0.1, 1.0)), ConfigError);
}

TEST(Solver, ValidationRejectsUnstableOrMalformedRuns) {
  SolverConfig c = small_config(0.01, 0.1);
  const RealField big = gaussian_profile(c.grid, 40.0, 20.0, 1.0);
  EXPECT_THROW(validate(c, big), ConfigError);
  c.sign = 0;
  EXPECT_THROW(validate(c, gaussian_profile(c.grid, 0.1, 20.0, 1.0)), ConfigError);
  c = small_config(0.01, 0.1);
  c.record_stride = 0;
  EXPECT_THROW(validate(c, gaussian_profile(c.grid, 0.1, 20.0, 1.0)), ConfigError);
  RealField other(GridSpec(1.0, 64));
  EXPECT_THROW(solve(other, small_config(0.01, 0.1)), ConfigError);
}

TEST(Solver, LinearLimitIsExactAiry) {
  SolverConfig c;
  c.dt = 1e-3;
  c.horizon = 0.5;
  c.nonlinearity = 0.0;
  c.record_stride = 100;
  const RealField u0 = gaussian_profile(c.grid, 1.0, 100.0, 2.0);
  const FlowRecord flow = solve(u0, c);
  MkdvStepper stepper(c);
  const SpectralField p0 = stepper.project(dft(u0));
  for (size_t i = 0; i < flow.times.size(); ++i) {
    const SpectralField ex = airy_propagate(p0, flow.times[i]);
    EXPECT_LE(l2_norm(dft(flow.states[i]) - ex), 1e-11 * l2_norm(p0)) << "t=" << flow.times[i];
  }
}

TEST(Solver, MassConservationOverUnitTime) {
  SolverConfig c;  // reference grid: L = 64 pi, n = 256
  c.dt = 1e-3;
  c.horizon = 1.0;
  c.record_stride = 50;
  const FlowRecord flow = solve(gaussian_profile(c.grid, 1.0, 100.0, 2.0), c);
  EXPECT_FALSE(flow.blow_up);
  EXPECT_LE(flow.mass_drift(), 1e-10);
  EXPECT_EQ(flow.times.back(), 1.0);
  EXPECT_EQ(flow.steps_taken, 1000);
  EXPECT_TRUE(flow.wraparound.ok);
}

TEST(Solver, FourthOrderSelfConvergence) {
  const SolverConfig base = small_config(0.02, 0.4);
  const RealField u0 = gaussian_profile(base.grid, 1.0, 25.0, 1.5);
  std::vector<RealField> sol;
  for (double dt : {0.02, 0.01, 0.005}) sol.push_back(final_state(u0, small_config(dt, 0.4)));
  const double e1 = l2_norm(dft(sol[0] - sol[1]));
  const double e2 = l2_norm(dft(sol[1] - sol[2]));
  const double order = std::log2(e1 / e2);
  EXPECT_NEAR(order, 4.0, 0.3) << "e1=" << e1 << " e2=" << e2;
}

TEST(Solver, ScalingEquivarianceIsExactForPowersOfTwo) {
  SolverConfig c = small_config(1e-3, 0.05);
  c.record_stride = 10;
  const RealField u0 = gaussian_profile(c.grid, 1.0, 25.0, 2.0);
  EXPECT_LE(scaling_equivariance_check(u0, 2.0, c), 1e-6);
  EXPECT_THROW(scaling_equivariance_check(u0, 3.0, c), DomainError);
}

TEST(Solver, DeterministicAndSignAware) {
  SolverConfig c = small_config(1e-3, 0.05);
  c.record_stride = 5;
  const RealField u0 = gaussian_profile(c.grid, 1.0, 25.0, 2.0);
  const FlowRecord a = solve(u0, c);
  const FlowRecord b = solve(u0, c);
  ASSERT_EQ(a.states.size(), b.states.size());
  for (size_t i = 0; i < a.states.size(); ++i) EXPECT_EQ(a.states[i].samples, b.states[i].samples);
  c.sign = -1;
  const FlowRecord d = solve(u0, c);
  EXPECT_GT(l2_norm(dft(d.states.back() - a.states.back())), 1e-8);
  EXPECT_LE(d.mass_drift(), 1e-12);
}

TEST(Solver, WraparoundValidator) {
  const GridSpec g(64.0 * kPi, 256);
  const WraparoundCheck ok = wraparound_check(g, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(ok.travel, 12.0);
  EXPECT_DOUBLE_EQ(ok.limit, g.length() / 4);
  EXPECT_TRUE(ok.ok);
  EXPECT_FALSE(wraparound_check(g, 1.0, 10.0).ok);
  SpectralField s(g);
  s.set(5, 1.0);
  s.set(-5, 1.0);
  EXPECT_DOUBLE_EQ(active_top_frequency(s), 5 * g.dxi());
  EXPECT_EQ(active_top_frequency(SpectralField(g)), 0.0);
}

TEST(Solver, DealiasingProjectsInitialData) {
  const SolverConfig c = small_config(1e-3, 0.01);
  MkdvStepper stepper(c);
  const SpectralField p = stepper.project(mkdv::testing::random_modes(c.grid, 31, 3));
  EXPECT_EQ(p.at(dealias_cutoff(c.grid) + 1), Complex{});
  EXPECT_NE(p.at(dealias_cutoff(c.grid)), Complex{});
}

TEST(Solver, BlowUpIsFlaggedWithPartialRecord) {
  SolverConfig c;
  c.grid = GridSpec(8.0 * kPi, 128);
  c.dt = 1e-3;
  c.horizon = 1.0;
  c.record_stride = 10;
  const FlowRecord flow = solve(gaussian_profile(c.grid, 6.0, 12.0, 0.5), c);
  EXPECT_TRUE(flow.blow_up);
  EXPECT_LT(flow.last_finite_time, 1.0);
  EXPECT_FALSE(flow.states.empty());
}

TEST(Persistence, FlowRecordRoundTripAndProvenance) {
  SolverConfig c = small_config(1e-3, 0.02);
  c.record_stride = 5;
  const FlowRecord flow = solve(gaussian_profile(c.grid, 0.5, 25.0, 2.0), c);
  const auto dir = mkdv::testing::scratch_dir("roundtrip");
  Provenance prov;
  prov.seed = 42;
  prov.command = "solve";
  prov.config_json = "{\"seed\":42}";
  write_flow_record(dir, flow, prov);
  const FlowRecord back = read_flow_record(dir);
  ASSERT_EQ(back.times.size(), flow.times.size());
  for (size_t i = 0; i < flow.times.size(); ++i) {
    EXPECT_EQ(back.times[i], flow.times[i]);
    EXPECT_EQ(back.states[i].samples, flow.states[i].samples);
    EXPECT_EQ(back.mass[i], flow.mass[i]);
  }
  for (const char* f : {"metadata.json", "snapshots.csv", "mass.csv"}) {
    const std::string text = mkdv::testing::slurp(dir / f);
    EXPECT_NE(text.find("\"seed\""), std::string::npos) << f;
    EXPECT_NE(text.find("42"), std::string::npos) << f;
    EXPECT_NE(text.find(version_string()), std::string::npos) << f;
  }
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
}
