#pragma once

#include <string>
#include <vector>

#include "mkdvlab/grid.hpp"

namespace mkdv {

/// Result of the wraparound validator: Airy group speed 3 xi^2 times the
/// horizon must stay within a quarter of the box.
struct WraparoundCheck {
  bool ok = true;
  double travel = 0.0;  ///< 3 xi_top^2 T
  double limit = 0.0;   ///< L / 4
};

WraparoundCheck wraparound_check(const GridSpec& grid, double horizon, double xi_top);
/// Largest |xi| carrying a coefficient above 1e-10 of the maximum (0 for zero data).
double active_top_frequency(const SpectralField& spec);

/// u_t + u_xxx + sign * nonlinearity * (u^3)_x = 0 on the periodic box.
struct SolverConfig {
  GridSpec grid{2.0 * 3.14159265358979323846 * 32.0, 256};
  double dt = 1e-4;
  double horizon = 1.0;
  int sign = 1;                ///< +1 focusing, -1 defocusing
  bool dealias = true;
  int record_stride = 1;       ///< snapshot every stride steps (the final step is always kept)
  double nonlinearity = 1.0;   ///< 0 reduces the scheme to exact Airy propagation
};

/// Number of steps horizon / dt; throws ConfigError unless it is a positive integer.
long long step_count(const SolverConfig& cfg);

/// Checks the configuration and the explicit stability bound
/// dt * 3 xi_band * nonlinearity * max|u0|^2 <= 2.5 for the given data.
void validate(const SolverConfig& cfg, const RealField& u0);

/// Integrating-factor RK4 with the Airy part integrated exactly.
class MkdvStepper {
 public:
  explicit MkdvStepper(const SolverConfig& cfg);

  /// Advances one step of size cfg.dt in place.
  void advance(SpectralField& u) const;
  /// -sign * nonlinearity * i xi * cube(u).
  SpectralField source(const SpectralField& u) const;
  /// Projection applied to initial data (2/3 band when dealiasing).
  SpectralField project(const SpectralField& u) const;

 private:
  SolverConfig cfg_;
  std::vector<Complex> half_;  // exp(i xi^3 dt / 2)
  std::vector<Complex> full_;  // exp(i xi^3 dt)
};

/// One step from physical data; the data are projected to the dealiased band first.
RealField step(const RealField& u, const SolverConfig& cfg);

struct FlowRecord {
  SolverConfig config;
  std::vector<double> times;
  std::vector<RealField> states;
  std::vector<double> mass;       ///< integral of u^2 at each record time
  long long steps_taken = 0;
  bool blow_up = false;
  double last_finite_time = 0.0;
  WraparoundCheck wraparound;

  /// max_t |m(t) - m(0)| / m(0), or the absolute drift when m(0) = 0.
  double mass_drift() const;
};

/// Runs the stepper over [0, horizon]. Non-finite values or a mass change
/// above 1% stop the run and set blow_up; the partial record is returned.
FlowRecord solve(const RealField& u0, const SolverConfig& cfg);

/// lambda u(lambda x, lambda^3 t) against a run on the box L / lambda with the
/// same n, dt / lambda^3 and data lambda u0(lambda x). Returns the largest
/// relative L^2 discrepancy over matched record times. lambda must be a power
/// of two (DomainError otherwise).
double scaling_equivariance_check(const RealField& u0, double lambda, const SolverConfig& cfg);

}  // namespace mkdv
