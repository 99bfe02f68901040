#include "mkdvlab/littlewood_paley.hpp"

#include <cmath>
#include <string>

#include "mkdvlab/errors.hpp"

namespace mkdv {

double lp_bump(double r) noexcept {
  const double a = std::abs(r);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double x = a - 1.0;
  const double x2 = x * x;
  const double smooth = x2 * x2 * (35.0 + x * (-84.0 + x * (70.0 - 20.0 * x)));
  return 1.0 - smooth;
}

LPPartition::LPPartition(double base, double top_frequency) : base_(base) {
  if (!(base >= 1.0) || !std::isfinite(base)) throw DomainError("LP base M must be >= 1");
  if (!std::isfinite(top_frequency)) throw DomainError("LP top frequency must be finite");
  double N = base;
  blocks_.push_back(N);
  while (N < top_frequency) {
    N *= 2.0;
    blocks_.push_back(N);
  }
}

LPPartition LPPartition::for_grid(const GridSpec& grid, double base) {
  return LPPartition(base, grid.xi_max());
}

bool LPPartition::has_block(double N) const noexcept {
  for (double b : blocks_)
    if (std::abs(b - N) <= 1e-12 * b) return true;
  return false;
}

double LPPartition::psi(double N, double xi) const {
  if (!has_block(N)) throw DomainError("frequency block " + std::to_string(N) + " is not in the partition");
  if (std::abs(N - base_) <= 1e-12 * base_) return lp_bump(xi / base_);
  return lp_bump(xi / N) - lp_bump(2.0 * xi / N);
}

SpectralField lp_project(const SpectralField& spec, const LPPartition& part, double N) {
  if (!part.has_block(N)) throw DomainError("frequency block " + std::to_string(N) + " is not in the partition");
  return apply_multiplier(spec, [&](double xi) { return part.psi(N, xi); });
}

SpectralField indicator_project(const SpectralField& spec, double lo, double hi) {
  return apply_multiplier(spec, [&](double xi) {
    const double a = std::abs(xi);
    return (a >= lo && a <= hi) ? 1.0 : 0.0;
  });
}

}  // namespace mkdv
