#include "mkdvlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mkdvlab/errors.hpp"
#include "mkdvlab/fft.hpp"

namespace mkdv {

GridSpec::GridSpec(double length, int n) : length_(length), n_(n) {
  if (!(length > 0.0) || !std::isfinite(length)) throw ConfigError("grid length must be positive and finite");
  if (n < 4 || n % 2 != 0) throw ConfigError("grid size must be an even integer >= 4, got " + std::to_string(n));
}

int GridSpec::index_of(int k) const noexcept {
  if (k >= n_ / 2 || k <= -n_ / 2) return -1;
  return k >= 0 ? k : k + n_;
}

RealField::RealField(const GridSpec& g, std::vector<double> values) : grid(g), samples(std::move(values)) {
  if (samples.size() != static_cast<size_t>(g.size()))
    throw ConfigError("RealField: " + std::to_string(samples.size()) + " samples for a grid of " +
                      std::to_string(g.size()));
  for (double v : samples)
    if (!std::isfinite(v)) throw ConfigError("RealField: non-finite sample");
}

SpectralField::SpectralField(const GridSpec& g, std::vector<Complex> values) : grid(g), coeffs(std::move(values)) {
  if (coeffs.size() != static_cast<size_t>(g.size()))
    throw ConfigError("SpectralField: " + std::to_string(coeffs.size()) + " coefficients for a grid of " +
                      std::to_string(g.size()));
  zero_nyquist();
}

Complex SpectralField::at(int k) const {
  const int i = grid.index_of(k);
  return i < 0 ? Complex{} : coeffs[static_cast<size_t>(i)];
}

void SpectralField::set(int k, Complex value) {
  const int i = grid.index_of(k);
  if (i < 0) throw DomainError("wavenumber " + std::to_string(k) + " is not representable");
  coeffs[static_cast<size_t>(i)] = value;
}

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw ConfigError("fields live on different grids");
}

SpectralField dft(const RealField& field) {
  const GridSpec& g = field.grid;
  const int n = g.size();
  if (field.samples.size() != static_cast<size_t>(n)) throw ConfigError("dft: sample count does not match grid");
  std::vector<Complex> half(static_cast<size_t>(n / 2 + 1));
  fft::forward_real(field.samples, half);
  SpectralField out(g);
  const double dx = g.dx();
  for (int k = 0; k < n / 2; ++k) out.coeffs[static_cast<size_t>(k)] = dx * half[static_cast<size_t>(k)];
  for (int k = 1; k < n / 2; ++k) out.coeffs[static_cast<size_t>(n - k)] = std::conj(out.coeffs[static_cast<size_t>(k)]);
  out.zero_nyquist();
  return out;
}

RealField idft(const SpectralField& spec) {
  const GridSpec& g = spec.grid;
  const int n = g.size();
  if (spec.coeffs.size() != static_cast<size_t>(n)) throw ConfigError("idft: coefficient count does not match grid");
  std::vector<Complex> half(static_cast<size_t>(n / 2 + 1));
  half[0] = Complex(spec.coeffs[0].real(), 0.0);
  for (int k = 1; k < n / 2; ++k)
    half[static_cast<size_t>(k)] =
        0.5 * (spec.coeffs[static_cast<size_t>(k)] + std::conj(spec.coeffs[static_cast<size_t>(n - k)]));
  RealField out(g);
  fft::inverse_real(half, out.samples);
  const double inv_l = 1.0 / g.length();
  for (double& v : out.samples) v *= inv_l;
  return out;
}

double hermitian_residual(const SpectralField& spec) {
  const int n = spec.grid.size();
  double scale = 0.0;
  double worst = 0.0;
  for (const Complex& c : spec.coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  worst = std::abs(spec.coeffs[0].imag());
  for (int k = 1; k < n / 2; ++k)
    worst = std::max(worst, std::abs(spec.coeffs[static_cast<size_t>(n - k)] -
                                     std::conj(spec.coeffs[static_cast<size_t>(k)])));
  return worst / scale;
}

void hermitian_symmetrize(SpectralField& spec) {
  const int n = spec.grid.size();
  spec.coeffs[0] = Complex(spec.coeffs[0].real(), 0.0);
  for (int k = 1; k < n / 2; ++k) {
    const Complex sym = 0.5 * (spec.coeffs[static_cast<size_t>(k)] + std::conj(spec.coeffs[static_cast<size_t>(n - k)]));
    spec.coeffs[static_cast<size_t>(k)] = sym;
    spec.coeffs[static_cast<size_t>(n - k)] = std::conj(sym);
  }
  spec.zero_nyquist();
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid, b.grid);
  SpectralField out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid, b.grid);
  SpectralField out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

SpectralField operator*(double s, const SpectralField& a) {
  SpectralField out = a;
  for (Complex& c : out.coeffs) c *= s;
  return out;
}

RealField operator-(const RealField& a, const RealField& b) {
  require_same_grid(a.grid, b.grid);
  RealField out = a;
  for (size_t i = 0; i < out.samples.size(); ++i) out.samples[i] -= b.samples[i];
  return out;
}

RealField shift(const RealField& field, int points) {
  const int n = field.grid.size();
  RealField out(field.grid);
  const int s = ((points % n) + n) % n;
  for (int j = 0; j < n; ++j) out.samples[static_cast<size_t>((j + s) % n)] = field.samples[static_cast<size_t>(j)];
  return out;
}

}  // namespace mkdv
