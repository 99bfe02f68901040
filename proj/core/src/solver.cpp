#include "mkdvlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mkdvlab/errors.hpp"
#include "mkdvlab/nonlinear.hpp"
#include "mkdvlab/norms.hpp"

namespace mkdv {

WraparoundCheck wraparound_check(const GridSpec& grid, double horizon, double xi_top) {
  WraparoundCheck w;
  w.travel = 3.0 * xi_top * xi_top * horizon;
  w.limit = grid.length() / 4.0;
  w.ok = w.travel <= w.limit;
  return w;
}

double active_top_frequency(const SpectralField& spec) {
  double top = 0.0;
  for (const Complex& c : spec.coeffs) top = std::max(top, std::abs(c));
  if (top == 0.0) return 0.0;
  double xi_top = 0.0;
  for (int i = 0; i < spec.grid.size(); ++i)
    if (std::abs(spec.coeffs[static_cast<size_t>(i)]) > 1e-10 * top)
      xi_top = std::max(xi_top, std::abs(spec.grid.xi(i)));
  return xi_top;
}

long long step_count(const SolverConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw ConfigError("dt must be positive and finite");
  if (!(cfg.horizon > 0.0) || !std::isfinite(cfg.horizon)) throw ConfigError("horizon must be positive and finite");
  const double r = cfg.horizon / cfg.dt;
  const double m = std::round(r);
  if (m < 1.0 || std::abs(r - m) > 1e-9 * r) {
    std::ostringstream msg;
    msg << "horizon " << cfg.horizon << " is not an integer multiple of dt " << cfg.dt;
    throw ConfigError(msg.str());
  }
  return static_cast<long long>(m);
}

void validate(const SolverConfig& cfg, const RealField& u0) {
  step_count(cfg);
  if (cfg.sign != 1 && cfg.sign != -1) throw ConfigError("sign must be +1 or -1");
  if (cfg.record_stride < 1) throw ConfigError("record_stride must be a positive integer");
  if (!std::isfinite(cfg.nonlinearity)) throw ConfigError("nonlinearity coefficient must be finite");
  if (!(u0.grid == cfg.grid)) throw ConfigError("initial data grid does not match the solver grid");
  double umax = 0.0;
  for (double v : u0.samples) umax = std::max(umax, std::abs(v));
  const int K = cfg.dealias ? dealias_cutoff(cfg.grid) : cfg.grid.size() / 2 - 1;
  const double xi_band = cfg.grid.dxi() * K;
  const double stiffness = cfg.dt * 3.0 * xi_band * std::abs(cfg.nonlinearity) * umax * umax;
  if (stiffness > 2.5) {
    std::ostringstream msg;
    msg << "dt = " << cfg.dt << " violates the nonlinear stability bound (dt * 3 xi_band |u|^2 = " << stiffness
        << " > 2.5); use dt <= " << cfg.dt * 2.5 / stiffness;
    throw ConfigError(msg.str());
  }
}

MkdvStepper::MkdvStepper(const SolverConfig& cfg) : cfg_(cfg) {
  const int n = cfg.grid.size();
  half_.resize(static_cast<size_t>(n));
  full_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double xi = cfg.grid.xi(i);
    const double phase = xi * xi * xi * cfg.dt;
    half_[static_cast<size_t>(i)] = std::polar(1.0, 0.5 * phase);
    full_[static_cast<size_t>(i)] = std::polar(1.0, phase);
  }
}

SpectralField MkdvStepper::project(const SpectralField& u) const {
  return cfg_.dealias ? truncate_two_thirds(u) : u;
}

SpectralField MkdvStepper::source(const SpectralField& u) const {
  SpectralField out(u.grid);
  const double coef = -cfg_.sign * cfg_.nonlinearity;
  if (coef == 0.0) return out;
  out = cube_spectrum(u, cfg_.dealias);
  for (int i = 0; i < u.grid.size(); ++i) out.coeffs[static_cast<size_t>(i)] *= Complex(0.0, coef * u.grid.xi(i));
  out.zero_nyquist();
  return out;
}

void MkdvStepper::advance(SpectralField& u) const {
  const size_t n = u.coeffs.size();
  const double dt = cfg_.dt;
  auto& c = u.coeffs;
  SpectralField tmp(u.grid);

  const SpectralField k1 = source(u);
  for (size_t i = 0; i < n; ++i) tmp.coeffs[i] = half_[i] * (c[i] + 0.5 * dt * k1.coeffs[i]);
  const SpectralField k2 = source(tmp);
  for (size_t i = 0; i < n; ++i) tmp.coeffs[i] = half_[i] * c[i] + 0.5 * dt * k2.coeffs[i];
  const SpectralField k3 = source(tmp);
  for (size_t i = 0; i < n; ++i) tmp.coeffs[i] = full_[i] * c[i] + dt * half_[i] * k3.coeffs[i];
  const SpectralField k4 = source(tmp);
  for (size_t i = 0; i < n; ++i)
    c[i] = full_[i] * c[i] +
           dt / 6.0 * (full_[i] * k1.coeffs[i] + 2.0 * half_[i] * (k2.coeffs[i] + k3.coeffs[i]) + k4.coeffs[i]);
  u.zero_nyquist();
}

RealField step(const RealField& u, const SolverConfig& cfg) {
  validate(cfg, u);
  const MkdvStepper stepper(cfg);
  SpectralField s = stepper.project(dft(u));
  stepper.advance(s);
  return idft(s);
}

double FlowRecord::mass_drift() const {
  if (mass.empty()) return 0.0;
  const double m0 = mass.front();
  double worst = 0.0;
  for (double m : mass) worst = std::max(worst, std::abs(m - m0));
  return m0 > 0.0 ? worst / m0 : worst;
}

FlowRecord solve(const RealField& u0, const SolverConfig& cfg) {
  validate(cfg, u0);
  const long long steps = step_count(cfg);
  const MkdvStepper stepper(cfg);
  SpectralField u = stepper.project(dft(u0));

  FlowRecord rec;
  rec.config = cfg;
  rec.wraparound = wraparound_check(cfg.grid, cfg.horizon, active_top_frequency(u));
  auto record = [&](double t) {
    rec.times.push_back(t);
    rec.states.push_back(idft(u));
    const double nrm = l2_norm(u);
    rec.mass.push_back(nrm * nrm);
  };
  record(0.0);
  const double m0 = rec.mass.front();

  for (long long s = 1; s <= steps; ++s) {
    SpectralField next = u;
    stepper.advance(next);
    const double nrm = l2_norm(next);
    const double mass = nrm * nrm;
    bool finite = std::isfinite(mass);
    for (const Complex& c : next.coeffs) finite = finite && std::isfinite(c.real()) && std::isfinite(c.imag());
    const bool jump = finite && std::abs(mass - m0) > 0.01 * std::max(m0, 1e-300);
    if (!finite || jump) {
      rec.blow_up = true;
      if (rec.times.back() != (s - 1) * cfg.dt) record((s - 1) * cfg.dt);
      rec.last_finite_time = (s - 1) * cfg.dt;
      rec.steps_taken = s - 1;
      return rec;
    }
    u = std::move(next);
    const double t = s == steps ? cfg.horizon : s * cfg.dt;
    if (s % cfg.record_stride == 0 || s == steps) record(t);
  }
  rec.steps_taken = steps;
  rec.last_finite_time = cfg.horizon;
  return rec;
}

double scaling_equivariance_check(const RealField& u0, double lambda, const SolverConfig& cfg) {
  if (!(lambda > 0.0)) throw DomainError("scaling factor must be positive");
  int e = 0;
  const double frac = std::frexp(lambda, &e);
  if (frac != 0.5) throw DomainError("scaling factor must be a power of two so the rescaled box stays representable");
  SolverConfig cb = cfg;
  cb.grid = GridSpec(cfg.grid.length() / lambda, cfg.grid.size());
  cb.dt = cfg.dt / (lambda * lambda * lambda);
  cb.horizon = cfg.horizon / (lambda * lambda * lambda);
  std::vector<double> vb(u0.samples);
  for (double& v : vb) v *= lambda;
  const FlowRecord a = solve(u0, cfg);
  const FlowRecord b = solve(RealField(cb.grid, std::move(vb)), cb);
  if (a.blow_up || b.blow_up) throw DomainError("scaling check run terminated by blow-up");
  const size_t count = std::min(a.times.size(), b.times.size());
  double worst = 0.0;
  for (size_t i = 0; i < count; ++i) {
    RealField ua = a.states[i];
    for (double& v : ua.samples) v *= lambda;
    const RealField ub = b.states[i];
    const double nb = l2_norm(ub);
    double diff = 0.0;
    for (size_t j = 0; j < ub.samples.size(); ++j) {
      const double d = ua.samples[j] - ub.samples[j];
      diff += d * d;
    }
    diff = std::sqrt(ub.grid.dx() * diff);
    worst = std::max(worst, nb > 0.0 ? diff / nb : diff);
  }
  return worst;
}

}  // namespace mkdv
