#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace mkdv {

using Complex = std::complex<double>;

/// Periodic box [0, L) sampled at n equispaced points.
///
/// Spectral coefficients are stored in FFT order: index i in [0, n/2) holds
/// wavenumber k = i, index i in [n/2, n) holds k = i - n. The Nyquist slot
/// (index n/2, k = -n/2) is kept at zero by every spectral write.
class GridSpec {
 public:
  GridSpec(double length, int n);

  double length() const noexcept { return length_; }
  int size() const noexcept { return n_; }
  double dx() const noexcept { return length_ / n_; }
  /// Lattice spacing in frequency, 2 pi / L.
  double dxi() const noexcept { return 2.0 * std::numbers::pi / length_; }

  double x(int j) const noexcept { return j * dx(); }
  int wavenumber(int index) const noexcept { return index < n_ / 2 ? index : index - n_; }
  double xi(int index) const noexcept { return dxi() * wavenumber(index); }
  /// Storage index of signed wavenumber k, or -1 when |k| is not representable.
  int index_of(int k) const noexcept;
  int nyquist_index() const noexcept { return n_ / 2; }
  /// Largest representable |xi| (the Nyquist frequency itself is excluded).
  double xi_max() const noexcept { return dxi() * (n_ / 2 - 1); }

  bool operator==(const GridSpec& other) const noexcept {
    return length_ == other.length_ && n_ == other.n_;
  }

 private:
  double length_;
  int n_;
};

/// Real samples u(x_j) on a grid.
struct RealField {
  GridSpec grid;
  std::vector<double> samples;

  explicit RealField(const GridSpec& g) : grid(g), samples(static_cast<size_t>(g.size()), 0.0) {}
  RealField(const GridSpec& g, std::vector<double> values);
};

/// Fourier coefficients hat u(xi_k) = dx * sum_j u_j exp(-i xi_k x_j), FFT order.
///
/// With this normalization the continuum Parseval identity reads
/// ||u||_2^2 = (1/L) sum_k |hat u_k|^2 = dx sum_j |u_j|^2.
struct SpectralField {
  GridSpec grid;
  std::vector<Complex> coeffs;

  explicit SpectralField(const GridSpec& g) : grid(g), coeffs(static_cast<size_t>(g.size())) {}
  SpectralField(const GridSpec& g, std::vector<Complex> values);

  Complex at(int k) const;
  void set(int k, Complex value);
  void zero_nyquist() noexcept { coeffs[static_cast<size_t>(grid.nyquist_index())] = 0.0; }
};

void require_same_grid(const GridSpec& a, const GridSpec& b);

SpectralField dft(const RealField& field);
RealField idft(const SpectralField& spec);

/// max_k |c(-k) - conj c(k)| / max_k |c(k)| (0 for the zero field).
double hermitian_residual(const SpectralField& spec);
/// Replaces coefficients by their Hermitian-symmetric part and zeroes Nyquist.
void hermitian_symmetrize(SpectralField& spec);

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double s, const SpectralField& a);
RealField operator-(const RealField& a, const RealField& b);

/// Pointwise multiplier m(xi_k) applied to every coefficient.
template <typename Multiplier>
SpectralField apply_multiplier(const SpectralField& spec, Multiplier&& m) {
  SpectralField out = spec;
  const int n = spec.grid.size();
  for (int i = 0; i < n; ++i) out.coeffs[static_cast<size_t>(i)] *= m(spec.grid.xi(i));
  out.zero_nyquist();
  return out;
}

/// Circular shift of samples by an integer number of grid points.
RealField shift(const RealField& field, int points);

}  // namespace mkdv
