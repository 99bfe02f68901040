#pragma once

#include <cstdint>
#include <random>

#include "mkdvlab/grid.hpp"
#include "mkdvlab/littlewood_paley.hpp"

namespace mkdv {

/// Mixes a base seed with stream identifiers (splitmix64 finalizer), so each
/// (scale, trial) pair gets an independent, reproducible stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) noexcept;

/// Portable random source: mt19937_64 bits mapped to doubles by fixed formulas,
/// so streams are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal by the Box-Muller transform.
  double normal();
  Complex complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Gaussian profile amplitude * exp(-((x - center) / width)^2).
RealField gaussian_profile(const GridSpec& grid, double amplitude, double center, double width);

/// I.i.d. complex Gaussian coefficients on modes with lo <= |xi| <= hi,
/// Hermitian-symmetrized, unit L^2 norm. Throws DomainError if no mode qualifies.
SpectralField random_band_data(const GridSpec& grid, double lo, double hi, Rng& rng);

/// Random data in Littlewood-Paley block N: Gaussian coefficients times psi_N,
/// Hermitian-symmetrized, unit L^2 norm.
SpectralField random_block_data(const GridSpec& grid, const LPPartition& part, double N, Rng& rng);

/// Multiplies a field by a Gaussian envelope exp(-((x - center) / width)^2)
/// (periodized distance) in physical space.
SpectralField envelope_localize(const SpectralField& spec, double center, double width);

/// Rough random data: Gaussian coefficients with weight (xi^2 + M)^{-s/2} on
/// 0 < |xi| <= xi_top, scaled so that ||u||_{H^s_M} = R.
SpectralField random_rough_data(const GridSpec& grid, double s, double M, double R, double xi_top, Rng& rng);

/// Rescales spec to unit L^2 norm; the zero field is returned unchanged.
SpectralField normalize_l2(const SpectralField& spec);

}  // namespace mkdv
