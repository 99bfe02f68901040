#pragma once

// Brute-force reference computations shared by unit and acceptance tests.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

#include "mkdvlab/b4.hpp"
#include "mkdvlab/grid.hpp"
#include "mkdvlab/variation.hpp"

namespace mkdv::oracle {

inline double b4_at(const B4Evaluator& b, const GridSpec& g, int k1, int k2, int k3, int k4) {
  const double d = g.dxi();
  return b.prefactor() * b.core_stable(std::array<double, 4>{d * k1, d * k2, d * k3, d * k4});
}

/// E_1 by enumerating every (k1, k2, k3, k4) in [-kmax, kmax]^4 with zero sum.
inline double e1_enumerated(const SpectralField& u, const B4Evaluator& b, int kmax) {
  std::complex<long double> acc = 0.0L;
  for (int k1 = -kmax; k1 <= kmax; ++k1)
    for (int k2 = -kmax; k2 <= kmax; ++k2)
      for (int k3 = -kmax; k3 <= kmax; ++k3)
        for (int k4 = -kmax; k4 <= kmax; ++k4) {
          if (k1 + k2 + k3 + k4 != 0) continue;
          const Complex prod = u.at(k1) * u.at(k2) * u.at(k3) * u.at(k4);
          if (prod == Complex{}) continue;
          const Complex t = b4_at(b, u.grid, k1, k2, k3, k4) * prod;
          acc += std::complex<long double>(t.real(), t.imag());
        }
  const double L = u.grid.length();
  return static_cast<double>(acc.real()) / (L * L * L);
}

/// R_6 from its six-fold form: hat w(k4) expanded as L^{-2} sum over k5 + k6 + k7 = k4.
/// Valid when the cube of u stays inside the dealiased band.
inline double r6_enumerated(const SpectralField& u, const B4Evaluator& b, int sign, int kmax) {
  std::complex<long double> acc = 0.0L;
  const double dxi = u.grid.dxi();
  for (int k1 = -kmax; k1 <= kmax; ++k1)
    for (int k2 = -kmax; k2 <= kmax; ++k2)
      for (int k3 = -kmax; k3 <= kmax; ++k3)
        for (int k5 = -kmax; k5 <= kmax; ++k5)
          for (int k6 = -kmax; k6 <= kmax; ++k6) {
            const int k4 = -(k1 + k2 + k3);
            const int k7 = k4 - k5 - k6;
            if (std::abs(k7) > kmax) continue;
            const Complex prod = u.at(k1) * u.at(k2) * u.at(k3) * u.at(k5) * u.at(k6) * u.at(k7);
            if (prod == Complex{}) continue;
            const Complex t = b4_at(b, u.grid, k1, k2, k3, k4) * Complex(0.0, dxi * k4) * prod;
            acc += std::complex<long double>(t.real(), t.imag());
          }
  const double L = u.grid.length();
  return -4.0 * sign * static_cast<double>(acc.real()) / std::pow(L, 5);
}

/// p-variation by enumerating every subset of interior sample points.
inline double variation_enumerated(const PathSample& p, double exponent) {
  const size_t K = p.values.size() - 1;
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (1ULL << (K - 1)); ++mask) {
    double sum = 0.0;
    size_t prev = 0;
    for (size_t j = 1; j <= K; ++j) {
      if (j < K && !(mask >> (j - 1) & 1ULL)) continue;
      sum += std::pow(p.metric.norm(p.values[j] - p.values[prev]), exponent);
      prev = j;
    }
    best = std::max(best, sum);
  }
  return std::pow(best, 1.0 / exponent);
}

}  // namespace mkdv::oracle
