#include "mkdvlab/random_data.hpp"

#include <cmath>
#include <numbers>

#include "mkdvlab/errors.hpp"
#include "mkdvlab/norms.hpp"

namespace mkdv {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) noexcept {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(th);
  has_spare_ = true;
  return r * std::cos(th);
}

RealField gaussian_profile(const GridSpec& grid, double amplitude, double center, double width) {
  RealField f(grid);
  for (int j = 0; j < grid.size(); ++j) {
    const double z = (grid.x(j) - center) / width;
    f.samples[static_cast<size_t>(j)] = amplitude * std::exp(-z * z);
  }
  return f;
}

SpectralField normalize_l2(const SpectralField& spec) {
  const double nrm = l2_norm(spec);
  return nrm > 0.0 ? (1.0 / nrm) * spec : spec;
}

namespace {

// Draws coefficients for k >= 0 and mirrors them, so the stream consumption
// does not depend on storage order.
template <typename Weight>
SpectralField hermitian_random(const GridSpec& grid, Rng& rng, Weight&& weight) {
  SpectralField out(grid);
  const int kmax = grid.size() / 2 - 1;
  bool any = false;
  for (int k = 0; k <= kmax; ++k) {
    const double w = weight(grid.dxi() * k);
    const Complex z = rng.complex_normal();
    if (w == 0.0) continue;
    any = true;
    if (k == 0) {
      out.set(0, w * z.real());
    } else {
      out.set(k, w * z);
      out.set(-k, w * std::conj(z));
    }
  }
  if (!any) throw DomainError("no representable modes in the requested frequency set");
  return out;
}

}  // namespace

SpectralField random_band_data(const GridSpec& grid, double lo, double hi, Rng& rng) {
  if (!(hi >= lo) || lo < 0.0) throw DomainError("random_band_data requires 0 <= lo <= hi");
  const double tol = 1e-12 * std::max(1.0, hi);
  return normalize_l2(hermitian_random(grid, rng, [&](double xi) {
    return (xi >= lo - tol && xi <= hi + tol) ? 1.0 : 0.0;
  }));
}

SpectralField random_block_data(const GridSpec& grid, const LPPartition& part, double N, Rng& rng) {
  if (!part.has_block(N)) throw DomainError("random_block_data: N is not a block of the partition");
  return normalize_l2(hermitian_random(grid, rng, [&](double xi) { return part.psi(N, xi); }));
}

SpectralField envelope_localize(const SpectralField& spec, double center, double width) {
  RealField f = idft(spec);
  const GridSpec& g = spec.grid;
  const double L = g.length();
  for (int j = 0; j < g.size(); ++j) {
    double d = std::remainder(g.x(j) - center, L);
    const double z = d / width;
    f.samples[static_cast<size_t>(j)] *= std::exp(-z * z);
  }
  return dft(f);
}

SpectralField random_rough_data(const GridSpec& grid, double s, double M, double R, double xi_top, Rng& rng) {
  if (!(R >= 0.0)) throw DomainError("random_rough_data requires R >= 0");
  SpectralField out = hermitian_random(grid, rng, [&](double xi) {
    return (xi > 0.0 && xi <= xi_top * (1.0 + 1e-12)) ? std::pow(xi * xi + M, -0.5 * s) : 0.0;
  });
  const double nrm = sobolev_norm(out, s, M);
  return nrm > 0.0 ? (R / nrm) * out : out;
}

}  // namespace mkdv
