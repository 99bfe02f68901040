#include <algorithm>
#include <cmath>
#include <sstream>

#include "mkdvlab/airy.hpp"
#include "mkdvlab/errors.hpp"
#include "mkdvlab/estimates.hpp"
#include "mkdvlab/nonlinear.hpp"
#include "mkdvlab/norms.hpp"
#include "mkdvlab/parallel.hpp"
#include "mkdvlab/random_data.hpp"

namespace mkdv {

GridSpec window_grid(const WindowOptions& o) {
  if (!(o.length > 0.0)) throw ConfigError("window box length must be positive");
  // Packet top frequency plus the envelope's spectral tail, tripled by the cube.
  const double packet_top = o.top_scale + o.band_half_width + 10.0 / o.envelope_width;
  const double band = 3.0 * packet_top;
  const double k_needed = band * o.length / (2.0 * std::numbers::pi);
  int n = 64;
  while ((n - 1) / 3 < k_needed) n *= 2;
  return GridSpec(o.length, n);
}

SpectralField window_data(const GridSpec& grid, double N, const WindowOptions& o) {
  if (!(N >= 1.0)) throw DomainError("window block N must be >= 1");
  if (!(o.band_half_width >= 0.0) || o.band_half_width >= N / 2.0)
    throw DomainError("window band must stay inside block N");
  const int kN = static_cast<int>(std::lround(N / grid.dxi()));
  const int J = static_cast<int>(std::floor(o.band_half_width / grid.dxi()));
  if (kN + J >= grid.size() / 2) throw DomainError("window block N exceeds the grid");
  Rng rng(o.seed);
  SpectralField phi(grid);
  for (int j = -J; j <= J; ++j) {
    const Complex z = rng.complex_normal();
    phi.set(kN + j, z);
    phi.set(-(kN + j), std::conj(z));
  }
  phi = envelope_localize(phi, grid.length() / 2.0, o.envelope_width);
  const double nrm = sobolev_norm(phi, o.s, 1.0);
  return (1.0 / nrm) * phi;
}

WindowCurve linear_window_experiment(double N, const WindowOptions& o) {
  if (o.records_per_unit_theta < 1 || o.steps_per_record < 1) throw ConfigError("window sampling must be positive");
  const double records_d = o.theta_max * o.records_per_unit_theta;
  const long long records = std::llround(records_d);
  if (records < 1 || std::abs(records_d - static_cast<double>(records)) > 1e-9)
    throw ConfigError("theta_max * records_per_unit_theta must be a positive integer");

  const GridSpec grid = window_grid(o);
  const double unit = std::pow(N, 4.0 * o.s - 1.0);
  SolverConfig cfg;
  cfg.grid = grid;
  cfg.horizon = o.theta_max * unit;
  cfg.dt = unit / (o.records_per_unit_theta * o.steps_per_record);
  cfg.sign = o.sign;
  cfg.dealias = true;
  cfg.record_stride = o.steps_per_record;
  cfg.nonlinearity = o.nonlinearity;

  const SpectralField phi = truncate_two_thirds(window_data(grid, N, o));
  const FlowRecord flow = solve(idft(phi), cfg);

  WindowCurve curve;
  curve.N = N;
  curve.s = o.s;
  curve.blow_up = flow.blow_up;
  curve.wraparound = flow.wraparound;
  // Free reference from the recorded initial state, so theta = 0 compares a state with itself.
  const SpectralField start = dft(flow.states.front());
  for (size_t i = 0; i < flow.times.size(); ++i) {
    const double t = flow.times[i];
    const SpectralField diff = dft(flow.states[i]) - airy_propagate(start, t);
    curve.times.push_back(t);
    curve.theta.push_back(t / unit);
    curve.deviation.push_back(sobolev_norm(diff, o.s, 1.0));
  }
  const auto at1 = static_cast<size_t>(o.records_per_unit_theta);
  if (at1 < curve.deviation.size()) curve.deviation_at_theta1 = curve.deviation[at1];
  return curve;
}

double apriori_reference(double s, double R, double T) {
  if (!(s > -0.125 && s < 0.0)) throw DomainError("reference growth factor needs -1/8 < s < 0");
  const double d = 1.0 + 8.0 * s;
  return std::max(1.0, std::pow(R, -8.0 * s / d) * std::pow(T, -s / d));
}

AprioriTable apriori_growth_experiment(const AprioriOptions& o) {
  if (o.trials < 1) throw ConfigError("apriori experiment needs at least one trial");
  AprioriTable table;
  table.s = o.s;
  table.M = o.M;
  table.R = o.R;
  table.T = o.solver.horizon;
  table.reference = apriori_reference(o.s, o.R, o.solver.horizon);
  const GridSpec& grid = o.solver.grid;
  const double xi_top = grid.dxi() * dealias_cutoff(grid);
  table.rows.resize(static_cast<size_t>(o.trials));
  parallel_for(table.rows.size(), [&](size_t i) {
    AprioriRow& row = table.rows[i];
    row.trial = static_cast<int>(i);
    row.seed = derive_seed(o.seed, static_cast<std::uint64_t>(i));
    Rng rng(row.seed);
    const SpectralField u0 = random_rough_data(grid, o.s, o.M, o.R, xi_top, rng);
    const FlowRecord flow = solve(idft(u0), o.solver);
    row.initial_norm = sobolev_norm(u0, o.s, o.M);
    for (const RealField& u : flow.states)
      row.max_ratio = std::max(row.max_ratio, sobolev_norm(dft(u), o.s, o.M) / row.initial_norm);
    row.blow_up = flow.blow_up;
    row.last_time = flow.last_finite_time;
  });
  for (const AprioriRow& r : table.rows) table.max_ratio = std::max(table.max_ratio, r.max_ratio);
  table.below_reference = table.max_ratio <= table.reference;
  return table;
}

}  // namespace mkdv
