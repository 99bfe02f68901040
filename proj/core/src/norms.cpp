#include "mkdvlab/norms.hpp"

#include <algorithm>
#include <cmath>

#include "mkdvlab/errors.hpp"

namespace mkdv {

double l2_norm(const RealField& f) {
  double sum = 0.0;
  for (double v : f.samples) sum += v * v;
  return std::sqrt(f.grid.dx() * sum);
}

double l2_norm(const SpectralField& f) {
  double sum = 0.0;
  for (const Complex& c : f.coeffs) sum += std::norm(c);
  return std::sqrt(sum / f.grid.length());
}

double lp_norm(const RealField& f, double p) {
  if (!(p >= 1.0)) throw DomainError("L^p norm requires p >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : f.samples) m = std::max(m, std::abs(v));
    return m;
  }
  if (p == 2.0) return l2_norm(f);
  double sum = 0.0;
  for (double v : f.samples) sum += std::pow(std::abs(v), p);
  return std::pow(f.grid.dx() * sum, 1.0 / p);
}

double sobolev_norm(const SpectralField& f, double s, double M) {
  if (!(M > 0.0)) throw DomainError("H^s_M requires M > 0");
  double sum = 0.0;
  const int n = f.grid.size();
  for (int i = 0; i < n; ++i) {
    const double xi = f.grid.xi(i);
    const double w = s == 0.0 ? 1.0 : std::pow(xi * xi + M, s);
    sum += w * std::norm(f.coeffs[static_cast<size_t>(i)]);
  }
  return std::sqrt(sum / f.grid.length());
}

double symbol_norm(const SpectralField& f, const SymbolA& a) {
  double sum = 0.0;
  const int n = f.grid.size();
  for (int i = 0; i < n; ++i) sum += a(f.grid.xi(i)) * std::norm(f.coeffs[static_cast<size_t>(i)]);
  return std::sqrt(sum / f.grid.length());
}

double block_l2_sobolev_sq(const SpectralField& f, const LPPartition& part, double s) {
  double total = 0.0;
  for (double N : part.blocks()) {
    const double b = sobolev_norm(lp_project(f, part, N), s, part.base());
    total += b * b;
  }
  return total;
}

BernsteinResult bernstein_ratio(const RealField& f, const LPPartition& part, double N, double p, double q) {
  if (!(p >= 1.0 && q >= p)) throw DomainError("Bernstein ratio requires 1 <= p <= q");
  BernsteinResult r;
  const SpectralField spec = dft(f);
  double inside = 0.0;
  double outside = 0.0;
  for (int i = 0; i < f.grid.size(); ++i) {
    const double a = std::abs(f.grid.xi(i));
    const double e = std::norm(spec.coeffs[static_cast<size_t>(i)]);
    ((a >= 0.5 * N && a <= 2.0 * N) ? inside : outside) += e;
  }
  r.leakage = (inside + outside) > 0.0 ? outside / (inside + outside) : 0.0;
  r.localized = r.leakage <= 1e-8;
  const double denom = lp_norm(f, p);
  const RealField projected = idft(lp_project(spec, part, N));
  r.ratio = denom > 0.0 ? lp_norm(projected, q) / denom : 0.0;
  const double ip = 1.0 / p;
  const double iq = std::isinf(q) ? 0.0 : 1.0 / q;
  r.standard_exponent = ip - iq;
  r.printed_exponent = iq - ip;
  return r;
}

}  // namespace mkdv
