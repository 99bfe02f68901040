#pragma once

#include <span>
#include <vector>

#include "mkdvlab/airy.hpp"
#include "mkdvlab/grid.hpp"

namespace mkdv {

enum class NormOrder {
  TimeOuter,   ///< L^p_t L^q_x
  SpaceOuter,  ///< L^p_x L^q_t
};

/// Streaming evaluator of a mixed space-time Lebesgue norm.
///
/// Time integrals use the trapezoid rule on the given sample times, space
/// integrals the dx-weighted sum; an infinite exponent is a maximum over
/// samples. States may be supplied in any order, one per time index, so long
/// trajectories never need to be held in memory.
class MixedNormAccumulator {
 public:
  MixedNormAccumulator(std::vector<double> times, const GridSpec& grid, double p, double q, NormOrder order);

  void add(size_t time_index, std::span<const double> samples);
  /// Throws DomainError unless every time index has been supplied.
  double value() const;

 private:
  std::vector<double> weights_;
  std::vector<char> seen_;
  double dx_;
  double p_, q_;
  NormOrder order_;
  std::vector<double> time_terms_;   // per-time spatial norms (time-outer)
  std::vector<double> space_acc_;    // per-point time integrals (space-outer)
};

double mixed_norm(const AiryTrajectory& traj, double p, double q, NormOrder order);
double mixed_norm(std::span<const RealField> states, std::span<const double> times, double p, double q,
                  NormOrder order);

}  // namespace mkdv
