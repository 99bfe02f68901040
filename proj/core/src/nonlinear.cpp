#include "mkdvlab/nonlinear.hpp"

#include <cstdlib>

namespace mkdv {

int dealias_cutoff(const GridSpec& grid) noexcept { return (grid.size() - 1) / 3; }

SpectralField truncate_two_thirds(const SpectralField& spec) {
  SpectralField out = spec;
  const int K = dealias_cutoff(spec.grid);
  for (int i = 0; i < spec.grid.size(); ++i)
    if (std::abs(spec.grid.wavenumber(i)) > K) out.coeffs[static_cast<size_t>(i)] = 0.0;
  out.zero_nyquist();
  return out;
}

SpectralField exact_cube_spectrum(const SpectralField& u) {
  const GridSpec& g = u.grid;
  const int n = g.size();
  const GridSpec fine(g.length(), 2 * n);
  SpectralField padded(fine);
  for (int k = -(n / 2 - 1); k <= n / 2 - 1; ++k) padded.set(k, u.at(k));
  RealField v = idft(padded);
  for (double& x : v.samples) x = x * x * x;
  const SpectralField cube = dft(v);
  SpectralField out(g);
  for (int k = -(n / 2 - 1); k <= n / 2 - 1; ++k) out.set(k, cube.at(k));
  return out;
}

SpectralField cube_spectrum(const SpectralField& u, bool dealias) {
  if (dealias) return truncate_two_thirds(exact_cube_spectrum(truncate_two_thirds(u)));
  RealField v = idft(u);
  for (double& x : v.samples) x = x * x * x;
  return dft(v);
}

}  // namespace mkdv
