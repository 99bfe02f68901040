#include "mkdvlab/b4.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mkdvlab/errors.hpp"
#include "mkdvlab/random_data.hpp"

namespace mkdv {

B4Evaluator::B4Evaluator(SymbolA a, double prefactor, double eps_rel)
    : a_(std::move(a)), prefactor_(prefactor), eps_(eps_rel) {
  if (!(eps_rel > 0.0 && eps_rel <= 0.1)) throw DomainError("b4 singular tolerance must lie in (0, 0.1]");
  if (!std::isfinite(prefactor)) throw DomainError("b4 prefactor must be finite");
}

double B4Evaluator::scale(double x1, double x2, double x3) const noexcept {
  const double x4 = -(x1 + x2 + x3);
  return std::max({std::abs(x1), std::abs(x2), std::abs(x3), std::abs(x4), a_.M()});
}

bool B4Evaluator::near_singular(double x1, double x2, double x3) const noexcept {
  const double sc = scale(x1, x2, x3);
  return std::abs((x1 + x2) * (x1 + x3) * (x2 + x3)) < eps_ * sc * sc * sc;
}

double B4Evaluator::core_reference(double x1, double x2, double x3) const {
  const double x4 = -(x1 + x2 + x3);
  const double M = a_.M();
  if (std::abs(x1) <= M && std::abs(x2) <= M && std::abs(x3) <= M && std::abs(x4) <= M) return 0.0;
  if (near_singular(x1, x2, x3)) throw DomainError("b4 reference quotient refused near the singular set");
  const double num = f(x1) + f(x2) + f(x3) + f(x4);
  const double den = x1 * x1 * x1 + x2 * x2 * x2 + x3 * x3 * x3 + x4 * x4 * x4;
  return num / den;
}

double B4Evaluator::g(double x, double y, double sc) const {
  const double s = x + y;
  const double cut = eps_ * sc;
  if (std::abs(s) >= cut) return (f(x) + f(y)) / s;
  // g(x, y) = (f(m + d) - f(m - d)) / (2d) with m = (x - y)/2, d = (x + y)/2.
  // Central quotients at h and 2h give the d^2 coefficient; the h^4 terms are
  // below roundoff at this step size.
  const double m = 0.5 * (x - y);
  const double d = 0.5 * s;
  const double h1 = cut / 8.0;
  const double h2 = 2.0 * h1;
  const double D1 = (f(m + h1) - f(m - h1)) / (2.0 * h1);
  const double D2 = (f(m + h2) - f(m - h2)) / (2.0 * h2);
  const double c = (D2 - D1) / (3.0 * h1 * h1);
  return D1 + c * (d * d - h1 * h1);
}

// y = (y0, y1 | y2, y3) with the pair sum y0 + y1 eliminated:
// Q = (g(y0, y1) - g(y2, y3)) / (3 (y0 + y2)(y0 + y3)).
double B4Evaluator::core_paired(const std::array<double, 4>& y, double sc) const {
  const double num = g(y[0], y[1], sc) - g(y[2], y[3], sc);
  return num / (3.0 * (y[0] + y[2]) * (y[0] + y[3]));
}

double B4Evaluator::core_canonical(const std::array<double, 4>& x, double sc) const {
  const double eta = eps_ * sc;
  const std::array<double, 3> p{std::abs(x[0] + x[1]), std::abs(x[0] + x[2]), std::abs(x[0] + x[3])};
  const auto j = static_cast<int>(std::min_element(p.begin(), p.end()) - p.begin());
  std::array<double, 4> y;
  switch (j) {
    case 0: y = {x[0], x[1], x[2], x[3]}; break;
    case 1: y = {x[0], x[2], x[1], x[3]}; break;
    default: y = {x[0], x[3], x[1], x[2]}; break;
  }
  if (std::abs(y[0] + y[3]) < std::abs(y[0] + y[2])) std::swap(y[2], y[3]);
  const double p13 = y[0] + y[2];
  if (std::abs(p13) >= eta) return core_paired(y, sc);

  // Two pair sums are small. Moving along (1, -1, 1, -1) stays on P_4 and
  // changes only y0 + y2, so interpolate in that sum from nodes at distance
  // >= eta where the quotient is well conditioned.
  const std::array<double, 4> nodes{-2.0 * eta, -eta, eta, 2.0 * eta};
  std::array<double, 4> vals;
  for (int k = 0; k < 4; ++k) {
    const double d = 0.5 * (nodes[static_cast<size_t>(k)] - p13);
    vals[static_cast<size_t>(k)] = core_paired({y[0] + d, y[1] - d, y[2] + d, y[3] - d}, sc);
  }
  double result = 0.0;
  for (size_t k = 0; k < 4; ++k) {
    double w = 1.0;
    for (size_t l = 0; l < 4; ++l)
      if (l != k) w *= (p13 - nodes[l]) / (nodes[k] - nodes[l]);
    result += w * vals[k];
  }
  return result;
}

double B4Evaluator::core_stable(const std::array<double, 4>& xi) const {
  const double M = a_.M();
  double sc = M;
  bool all_low = true;
  for (double v : xi) {
    sc = std::max(sc, std::abs(v));
    all_low = all_low && std::abs(v) <= M;
  }
  if (all_low) return 0.0;
  // Canonical representative of the orbit under permutations and xi -> -xi.
  std::array<double, 4> up = xi;
  std::array<double, 4> down;
  for (size_t k = 0; k < 4; ++k) down[k] = -xi[k];
  std::sort(up.begin(), up.end());
  std::sort(down.begin(), down.end());
  const auto& canon = std::lexicographical_compare(down.begin(), down.end(), up.begin(), up.end()) ? down : up;
  return core_canonical(canon, sc);
}

double B4Evaluator::core_stable(double x1, double x2, double x3) const {
  return core_stable(std::array<double, 4>{x1, x2, x3, -(x1 + x2 + x3)});
}

B4Evaluator make_flow_b4(const SymbolA& a, int sign, double eps_rel) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  return B4Evaluator(a, -0.5 * sign, eps_rel);
}

double dyadic_zone(double xi, double M) noexcept {
  const double r = std::abs(xi);
  if (r <= M) return M;
  return std::max(M, std::exp2(std::round(std::log2(r))));
}

B4SizeReport b4_size_sweep(const SymbolA& a, double N_top, int samples_per_cell, std::uint64_t seed) {
  if (samples_per_cell < 1) throw DomainError("b4 size sweep needs at least one sample per cell");
  const double M = a.M();
  if (!(N_top >= M)) throw DomainError("b4 size sweep requires N_top >= M");
  const B4Evaluator q(a, 1.0);
  std::vector<double> levels;
  for (double N = M; N <= N_top * (1.0 + 1e-12); N *= 2.0) levels.push_back(N);

  B4SizeReport rep;
  std::uint64_t cell = 0;
  const double r2 = std::sqrt(2.0);
  for (size_t i1 = 0; i1 < levels.size(); ++i1)
    for (size_t i2 = i1; i2 < levels.size(); ++i2)
      for (size_t i3 = i2; i3 < levels.size(); ++i3, ++cell) {
        Rng rng(derive_seed(seed, cell));
        const std::array<double, 3> Ns{levels[i1], levels[i2], levels[i3]};
        for (int t = 0; t < samples_per_cell; ++t) {
          B4SizeSample smp;
          for (size_t j = 0; j < 3; ++j) {
            const double lo = Ns[j] == M ? 0.0 : Ns[j] / r2;
            const double mag = rng.uniform(lo, Ns[j] * r2);
            smp.xi[j] = rng.uniform() < 0.5 ? -mag : mag;
          }
          smp.xi[3] = -(smp.xi[0] + smp.xi[1] + smp.xi[2]);
          for (size_t j = 0; j < 4; ++j) smp.zones[j] = dyadic_zone(smp.xi[j], M);
          std::sort(smp.zones.begin(), smp.zones.end());
          smp.value = std::abs(q.core_stable(smp.xi));
          smp.bound = a(smp.zones[1]) / (smp.zones[3] * smp.zones[3]);
          smp.ratio = smp.value / smp.bound;
          ++rep.samples;
          if (smp.ratio > rep.constant || rep.samples == 1) {
            rep.constant = std::max(rep.constant, smp.ratio);
            rep.worst = smp;
          }
        }
      }
  return rep;
}

namespace {

double rel(double diff, double size) { return size > 0.0 ? std::abs(diff) / size : std::abs(diff); }

// Magnitude scale of Q at xi: a(second smallest |xi|) / (largest |xi|)^2,
// magnitudes floored at M. Q can vanish identically (plateau of a), so
// residuals are measured against max(|Q|, this scale).
double natural_size(const SymbolA& a, std::array<double, 4> xi) {
  for (double& v : xi) v = std::max(std::abs(v), a.M());
  std::sort(xi.begin(), xi.end());
  return a(xi[1]) / (xi[3] * xi[3]);
}

double symmetry_residual(const B4Evaluator& q, std::array<double, 4> xi, double base, double size) {
  std::sort(xi.begin(), xi.end());
  double worst = 0.0;
  do {
    const double v = q.core_stable(xi);
    if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, rel(v - base, std::max(std::abs(base), size)));
  } while (std::next_permutation(xi.begin(), xi.end()));
  return worst;
}

}  // namespace

B4CheckReport b4_check(const SymbolA& a, int samples, int near_samples, std::uint64_t seed, double eps_rel) {
  if (samples < 1 || near_samples < 0) throw DomainError("b4 check sample counts must be positive");
  const B4Evaluator q(a, 1.0, eps_rel);
  const double span = 4.0 * (a.an_tag() ? std::max(a.M(), a.an_tag()->N) : 16.0 * a.M());
  auto fa = [&](double x) { return x * a(x); };
  B4CheckReport rep;
  rep.printed_ratio_min = std::numeric_limits<double>::infinity();
  rep.printed_ratio_max = -std::numeric_limits<double>::infinity();
  Rng rng(derive_seed(seed, 0x62345));
  while (rep.samples < static_cast<std::size_t>(samples)) {
    const double x1 = rng.uniform(-span, span);
    const double x2 = rng.uniform(-span, span);
    const double x3 = rng.uniform(-span, span);
    const double x4 = -(x1 + x2 + x3);
    const double cubes = x1 * x1 * x1 + x2 * x2 * x2 + x3 * x3 * x3 + x4 * x4 * x4;
    const double abs_cubes = std::abs(x1 * x1 * x1) + std::abs(x2 * x2 * x2) + std::abs(x3 * x3 * x3) +
                             std::abs(x4 * x4 * x4);
    rep.factorization_max =
        std::max(rep.factorization_max, rel(cubes - 3.0 * (x1 + x2) * (x1 + x3) * (x1 + x4), abs_cubes));
    const double printed = cubes / ((x1 + x2) * (x1 + x3) * (x2 + x3));
    rep.printed_ratio_min = std::min(rep.printed_ratio_min, printed);
    rep.printed_ratio_max = std::max(rep.printed_ratio_max, printed);
    if (q.near_singular(x1, x2, x3)) continue;
    ++rep.samples;
    const double s = q.core_stable(x1, x2, x3);
    rep.finite = rep.finite && std::isfinite(s);
    const double r = q.core_reference(x1, x2, x3);
    const double size = std::max(std::abs(r), natural_size(a, {x1, x2, x3, x4}));
    const double num = fa(x1) + fa(x2) + fa(x3) + fa(x4);
    const double num_size = std::abs(fa(x1)) + std::abs(fa(x2)) + std::abs(fa(x3)) + std::abs(fa(x4));
    rep.identity_max = std::max(rep.identity_max, rel(s * cubes - num, num_size));
    rep.agreement_max = std::max(rep.agreement_max, rel(s - r, size));
    rep.symmetry_max = std::max(rep.symmetry_max, symmetry_residual(q, {x1, x2, x3, x4}, s, size));
    const double flipped = q.core_stable(std::array<double, 4>{-x1, -x2, -x3, -x4});
    rep.evenness_max = std::max(rep.evenness_max, rel(flipped - s, size));
  }
  // Points within 1e-6 scale of one or two vanishing pair sums.
  for (int i = 0; i < near_samples; ++i) {
    const double x1 = rng.uniform(-span, span);
    const double sc = std::max(span, a.M());
    const double d1 = rng.uniform(-1e-6, 1e-6) * sc;
    const double d2 = rng.uniform(-1e-6, 1e-6) * sc;
    double x2;
    double x3;
    if (i % 2 == 0) {
      x2 = rng.uniform(-span, span);
      x3 = -x1 + d1;  // x1 + x3 small
    } else {
      x2 = -x1 + d1;  // x1 + x2 small
      x3 = -x1 + rng.uniform(-span, span) * 0.5 + d2;
      x3 = (i % 4 == 1) ? x3 : -x1 + d2;  // optionally x1 + x3 small as well
    }
    const double x4 = -(x1 + x2 + x3);
    const double s = q.core_stable(x1, x2, x3);
    rep.finite = rep.finite && std::isfinite(s);
    rep.near_symmetry_max =
        std::max(rep.near_symmetry_max, symmetry_residual(q, {x1, x2, x3, x4}, s, natural_size(a, {x1, x2, x3, x4})));
    ++rep.near_samples;
  }
  return rep;
}

}  // namespace mkdv
