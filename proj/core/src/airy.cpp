#include "mkdvlab/airy.hpp"

#include <cmath>

#include "mkdvlab/errors.hpp"

namespace mkdv {

SpectralField airy_propagate(const SpectralField& spec, double t) {
  if (t == 0.0) return spec;
  return apply_multiplier(spec, [t](double xi) { return std::polar(1.0, t * xi * xi * xi); });
}

SpectralField fractional_derivative(const SpectralField& spec, double alpha) {
  return apply_multiplier(spec, [alpha](double xi) {
    const double a = std::abs(xi);
    if (a == 0.0) return 0.0;
    return alpha == 0.0 ? 1.0 : std::pow(a, alpha);
  });
}

AiryTrajectory make_airy_trajectory(const SpectralField& initial, std::vector<double> times) {
  if (times.empty()) throw DomainError("trajectory needs at least one time");
  for (size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw DomainError("trajectory times must be strictly increasing");
  AiryTrajectory traj{initial.grid, std::move(times), {}};
  traj.states.reserve(traj.times.size());
  for (double t : traj.times) traj.states.push_back(airy_propagate(initial, t));
  return traj;
}

std::vector<double> uniform_times(double t0, double t1, int count) {
  if (count < 2) throw DomainError("uniform_times needs at least two samples");
  std::vector<double> out(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = t0 + (t1 - t0) * i / (count - 1);
  out.back() = t1;
  return out;
}

}  // namespace mkdv
