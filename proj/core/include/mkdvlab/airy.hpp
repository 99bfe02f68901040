#pragma once

#include <vector>

#include "mkdvlab/grid.hpp"

namespace mkdv {

/// Linear Airy group exp(-t d_x^3): multiplies hat u(xi) by exp(i t xi^3).
SpectralField airy_propagate(const SpectralField& spec, double t);

/// |D|^alpha as the multiplier |xi|^alpha with the zero mode sent to 0.
/// Negative alpha is accepted for block-localized data (maximal-function
/// normalizations use alpha = -1/4).
SpectralField fractional_derivative(const SpectralField& spec, double alpha);

/// Samples of a free Airy evolution at strictly increasing times.
struct AiryTrajectory {
  GridSpec grid;
  std::vector<double> times;
  std::vector<SpectralField> states;
};

/// States exp(-t_j d_x^3) initial, with initial given at t = 0.
AiryTrajectory make_airy_trajectory(const SpectralField& initial, std::vector<double> times);

/// n equispaced times on [t0, t1] inclusive.
std::vector<double> uniform_times(double t0, double t1, int count);

}  // namespace mkdv
