#pragma once

#include <vector>

#include "mkdvlab/grid.hpp"

namespace mkdv {

/// Smooth cutoff chi(r): 1 for |r| <= 1, 0 for |r| >= 2, and 1 - S(|r| - 1) in
/// between, where S(x) = x^4 (35 - 84 x + 70 x^2 - 20 x^3) is the C^3 smoothstep.
double lp_bump(double r) noexcept;

/// Dyadic partition of unity on frequencies with base block M.
///
/// psi_M(xi) = chi(xi / M) and psi_N(xi) = chi(xi / N) - chi(2 xi / N) for N > M.
/// The sum over blocks telescopes to chi(xi / N_max), which is 1 on |xi| <= N_max.
class LPPartition {
 public:
  /// Blocks M, 2M, ... up to the first N_max >= top_frequency.
  LPPartition(double base, double top_frequency);

  /// Partition covering every representable frequency of a grid.
  static LPPartition for_grid(const GridSpec& grid, double base);

  double base() const noexcept { return base_; }
  const std::vector<double>& blocks() const noexcept { return blocks_; }
  bool has_block(double N) const noexcept;
  double psi(double N, double xi) const;

 private:
  double base_;
  std::vector<double> blocks_;
};

SpectralField lp_project(const SpectralField& spec, const LPPartition& part, double N);

/// Sharp projection keeping coefficients with lo <= |xi| <= hi.
SpectralField indicator_project(const SpectralField& spec, double lo, double hi);

}  // namespace mkdv
