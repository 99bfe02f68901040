#include "mkdvlab/mixed_norm.hpp"

#include <algorithm>
#include <cmath>

#include "mkdvlab/errors.hpp"

namespace mkdv {
namespace {

// |v|^e with fast paths for the exponents the estimate sweeps use.
inline double abs_pow(double v, double e) {
  const double a = std::abs(v);
  if (e == 2.0) return a * a;
  if (e == 4.0) {
    const double s = a * a;
    return s * s;
  }
  if (e == 6.0) {
    const double s = a * a;
    return s * s * s;
  }
  if (e == 1.0) return a;
  return std::pow(a, e);
}

}  // namespace

MixedNormAccumulator::MixedNormAccumulator(std::vector<double> times, const GridSpec& grid, double p, double q,
                                           NormOrder order)
    : dx_(grid.dx()), p_(p), q_(q), order_(order) {
  if (times.size() < 2) throw DomainError("mixed norm needs at least two time samples");
  if (!(p >= 1.0) || !(q >= 1.0)) throw DomainError("mixed norm exponents must be in [1, inf]");
  for (size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw DomainError("mixed norm times must be strictly increasing");
  const size_t k = times.size();
  weights_.resize(k);
  weights_[0] = 0.5 * (times[1] - times[0]);
  weights_[k - 1] = 0.5 * (times[k - 1] - times[k - 2]);
  for (size_t i = 1; i + 1 < k; ++i) weights_[i] = 0.5 * (times[i + 1] - times[i - 1]);
  seen_.assign(k, 0);
  if (order_ == NormOrder::TimeOuter)
    time_terms_.assign(k, 0.0);
  else
    space_acc_.assign(static_cast<size_t>(grid.size()), 0.0);
}

void MixedNormAccumulator::add(size_t time_index, std::span<const double> samples) {
  if (time_index >= weights_.size()) throw DomainError("mixed norm time index out of range");
  seen_[time_index] = 1;
  if (order_ == NormOrder::TimeOuter) {
    double spatial = 0.0;
    if (std::isinf(q_)) {
      for (double v : samples) spatial = std::max(spatial, std::abs(v));
    } else {
      double sum = 0.0;
      for (double v : samples) sum += abs_pow(v, q_);
      spatial = std::pow(dx_ * sum, 1.0 / q_);
    }
    time_terms_[time_index] = spatial;
    return;
  }
  if (samples.size() != space_acc_.size()) throw DomainError("mixed norm sample count mismatch");
  if (std::isinf(q_)) {
    for (size_t j = 0; j < samples.size(); ++j) space_acc_[j] = std::max(space_acc_[j], std::abs(samples[j]));
  } else {
    const double w = weights_[time_index];
    for (size_t j = 0; j < samples.size(); ++j) space_acc_[j] += w * abs_pow(samples[j], q_);
  }
}

double MixedNormAccumulator::value() const {
  if (std::find(seen_.begin(), seen_.end(), 0) != seen_.end())
    throw DomainError("mixed norm evaluated before all time samples were supplied");
  if (order_ == NormOrder::TimeOuter) {
    if (std::isinf(p_)) return *std::max_element(time_terms_.begin(), time_terms_.end());
    double sum = 0.0;
    for (size_t i = 0; i < time_terms_.size(); ++i) sum += weights_[i] * abs_pow(time_terms_[i], p_);
    return std::pow(sum, 1.0 / p_);
  }
  // Per-point time norms: acc^{1/q} (or the running max when q is infinite).
  const bool q_inf = std::isinf(q_);
  if (std::isinf(p_)) {
    double m = 0.0;
    for (double a : space_acc_) m = std::max(m, q_inf ? a : std::pow(a, 1.0 / q_));
    return m;
  }
  double sum = 0.0;
  for (double a : space_acc_) {
    const double point = q_inf ? a : std::pow(a, 1.0 / q_);
    sum += abs_pow(point, p_);
  }
  return std::pow(dx_ * sum, 1.0 / p_);
}

double mixed_norm(const AiryTrajectory& traj, double p, double q, NormOrder order) {
  MixedNormAccumulator acc(traj.times, traj.grid, p, q, order);
  for (size_t i = 0; i < traj.states.size(); ++i) acc.add(i, idft(traj.states[i]).samples);
  return acc.value();
}

double mixed_norm(std::span<const RealField> states, std::span<const double> times, double p, double q,
                  NormOrder order) {
  if (states.size() != times.size()) throw DomainError("mixed norm: states and times differ in length");
  if (states.empty()) throw DomainError("mixed norm needs at least two time samples");
  MixedNormAccumulator acc(std::vector<double>(times.begin(), times.end()), states.front().grid, p, q, order);
  for (size_t i = 0; i < states.size(); ++i) acc.add(i, states[i].samples);
  return acc.value();
}

}  // namespace mkdv
