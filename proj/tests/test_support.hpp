#pragma once

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mkdvlab/grid.hpp"
#include "mkdvlab/random_data.hpp"

namespace mkdv::testing {

/// Real field whose spectrum is exactly the given modes (k, coefficient), mirrored.
inline SpectralField modes(const GridSpec& g, const std::vector<std::pair<int, Complex>>& list) {
  SpectralField s(g);
  for (const auto& [k, c] : list) {
    s.set(k, c);
    s.set(-k, std::conj(c));
  }
  return s;
}

/// Random Hermitian spectrum on 1 <= |k| <= kmax.
inline SpectralField random_modes(const GridSpec& g, int kmax, std::uint64_t seed, double amp = 1.0) {
  Rng rng(seed);
  SpectralField s(g);
  for (int k = 1; k <= kmax; ++k) {
    const Complex c = amp * rng.complex_normal();
    s.set(k, c);
    s.set(-k, std::conj(c));
  }
  return s;
}

/// Naive O(n^2) transform with the project normalization.
inline std::vector<Complex> naive_dft(const RealField& u) {
  const GridSpec& g = u.grid;
  std::vector<Complex> out(static_cast<size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    std::complex<long double> acc = 0.0L;
    for (int j = 0; j < g.size(); ++j) {
      const long double ph = -static_cast<long double>(g.xi(i)) * static_cast<long double>(g.x(j));
      acc += static_cast<long double>(u.samples[static_cast<size_t>(j)]) *
             std::complex<long double>(std::cos(ph), std::sin(ph));
    }
    out[static_cast<size_t>(i)] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag())) * g.dx();
  }
  return out;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("mkdvlab-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace mkdv::testing
