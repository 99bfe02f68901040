#include "mkdvlab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mkdvlab/errors.hpp"
#include "mkdvlab/nonlinear.hpp"
#include "mkdvlab/norms.hpp"
#include "mkdvlab/parallel.hpp"
#include "mkdvlab/solver.hpp"

namespace mkdv {

double energy_E0(const SpectralField& u, const SymbolA& a) {
  const double n = symbol_norm(u, a);
  return n * n;
}

double energy_E0(const RealField& u, const SymbolA& a) { return energy_E0(dft(u), a); }

double remainder_R4(const SpectralField& u, const SymbolA& a, int sign) {
  const SpectralField w = exact_cube_spectrum(u);
  const GridSpec& g = u.grid;
  std::vector<double> terms(static_cast<size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    const double xi = g.xi(i);
    const size_t k = static_cast<size_t>(i);
    terms[k] = (Complex(0.0, xi * a(xi)) * u.coeffs[k] * std::conj(w.coeffs[k])).real();
  }
  return 2.0 * sign * pairwise_sum(terms) / g.length();
}

double remainder_R4(const RealField& u, const SymbolA& a, int sign) { return remainder_R4(dft(u), a, sign); }

namespace {

struct ActiveModes {
  std::vector<int> k;
  std::vector<Complex> c;
};

ActiveModes active_modes(const SpectralField& u) {
  double top = 0.0;
  for (const Complex& c : u.coeffs) top = std::max(top, std::abs(c));
  ActiveModes out;
  if (top == 0.0) return out;
  const int n = u.grid.size();
  for (int k = -(n / 2 - 1); k <= n / 2 - 1; ++k) {
    const Complex c = u.at(k);
    if (std::abs(c) > kActiveThreshold * top) {
      out.k.push_back(k);
      out.c.push_back(c);
    }
  }
  const auto count = static_cast<long long>(out.k.size());
  if (count > kMaxActiveModes) {
    std::ostringstream msg;
    msg << "quartic sum needs " << count << " active modes but the budget allows " << kMaxActiveModes
        << " (n_active^3 <= 1e9); reduce the grid or band-limit the data";
    throw BudgetError(msg.str(), count, kMaxActiveModes);
  }
  return out;
}

// sum over active (k1, k2, k3) and k4 = -(k1+k2+k3) of b4(xi) * c1 c2 c3 * z(k4).
template <typename Fourth>
MultilinearValue quartic_sum(const SpectralField& u, const B4Evaluator& b4, Fourth&& fourth) {
  const ActiveModes act = active_modes(u);
  MultilinearValue out;
  out.active = static_cast<long long>(act.k.size());
  if (act.k.empty()) return out;
  const double dxi = u.grid.dxi();
  const size_t m = act.k.size();
  std::vector<Complex> partial(m);
  std::vector<double> magnitude(m);
  parallel_for(m, [&](size_t i1) {
    Complex s = 0.0;
    double mag = 0.0;
    const int k1 = act.k[i1];
    for (size_t i2 = 0; i2 < m; ++i2) {
      const int k2 = act.k[i2];
      const Complex c12 = act.c[i1] * act.c[i2];
      for (size_t i3 = 0; i3 < m; ++i3) {
        const int k3 = act.k[i3];
        const int k4 = -(k1 + k2 + k3);
        const Complex z = fourth(k4);
        if (z == Complex{}) continue;
        const double b =
            b4.prefactor() * b4.core_stable(std::array<double, 4>{dxi * k1, dxi * k2, dxi * k3, dxi * k4});
        if (b == 0.0) continue;
        const Complex term = b * c12 * act.c[i3] * z;
        s += term;
        mag += std::abs(term);
      }
    }
    partial[i1] = s;
    magnitude[i1] = mag;
  });
  const Complex total = pairwise_sum(partial);
  const double total_mag = pairwise_sum(magnitude);
  const double L = u.grid.length();
  out.value = total.real() / (L * L * L);
  out.imag_residual = total_mag > 0.0 ? std::abs(total.imag()) / total_mag : 0.0;
  return out;
}

}  // namespace

MultilinearValue energy_E1_detailed(const SpectralField& u, const B4Evaluator& b4) {
  return quartic_sum(u, b4, [&](int k4) { return u.at(k4); });
}

double energy_E1(const SpectralField& u, const B4Evaluator& b4) { return energy_E1_detailed(u, b4).value; }

double energy_E1(const RealField& u, const B4Evaluator& b4) { return energy_E1(dft(u), b4); }

MultilinearValue remainder_R6_detailed(const SpectralField& u, const B4Evaluator& b4, int sign, bool dealias) {
  const SpectralField w = cube_spectrum(u, dealias);
  const double dxi = u.grid.dxi();
  MultilinearValue out = quartic_sum(u, b4, [&](int k4) { return Complex(0.0, dxi * k4) * w.at(k4); });
  out.value *= -4.0 * sign;
  return out;
}

double remainder_R6(const SpectralField& u, const B4Evaluator& b4, int sign, bool dealias) {
  return remainder_R6_detailed(u, b4, sign, dealias).value;
}

double remainder_R6(const RealField& u, const B4Evaluator& b4, int sign, bool dealias) {
  return remainder_R6(dft(u), b4, sign, dealias);
}

double e1_bound_probe(const SpectralField& u, const B4Evaluator& b4, double M) {
  const double ha = symbol_norm(u, b4.symbol());
  const double hm = sobolev_norm(u, -0.5, M);
  const double denom = ha * ha * hm * hm;
  if (denom == 0.0) return 0.0;
  return std::abs(energy_E1(u, b4)) / denom;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

IdentityReport energy_identity_check(const FlowRecord& flow, const B4Evaluator& b4, IdentityKind kind, int sign,
                                     const IdentityOptions& options) {
  const auto& t = flow.times;
  if (t.size() < 3) throw ConfigError("identity check needs at least three record times");
  if (options.fd_steps.empty()) throw ConfigError("identity check needs at least one finite-difference step");
  const double spacing = t[1] - t[0];
  for (size_t i = 2; i < t.size(); ++i)
    if (std::abs((t[i] - t[i - 1]) - spacing) > 1e-9 * spacing)
      throw ConfigError("identity check needs uniformly spaced record times");

  std::vector<size_t> multiples;
  for (double h : options.fd_steps) {
    const double r = h / spacing;
    const double m = std::round(r);
    if (m < 1.0 || std::abs(r - m) > 1e-6 * std::max(1.0, r)) {
      std::ostringstream msg;
      msg << "finite-difference step " << h << " is not a multiple of the record spacing " << spacing;
      throw ConfigError(msg.str());
    }
    multiples.push_back(static_cast<size_t>(m));
  }
  const size_t reach = *std::max_element(multiples.begin(), multiples.end());
  if (t.size() < 2 * reach + 1) throw ConfigError("record too short for the requested finite-difference steps");

  const size_t lo = reach;
  const size_t hi = t.size() - 1 - reach;
  const size_t points = std::min<size_t>(static_cast<size_t>(std::max(1, options.max_points)), hi - lo + 1);
  std::vector<size_t> centers;
  for (size_t j = 0; j < points; ++j)
    centers.push_back(points == 1 ? (lo + hi) / 2 : lo + (hi - lo) * j / (points - 1));

  const SymbolA& a = b4.symbol();
  auto energy = [&](size_t i) {
    const SpectralField u = dft(flow.states[i]);
    double e = energy_E0(u, a);
    if (kind == IdentityKind::E0E1_R6) e += energy_E1(u, b4);
    return e;
  };

  IdentityReport rep;
  rep.kind = kind;
  std::vector<double> remainder(centers.size());
  for (size_t c = 0; c < centers.size(); ++c) {
    const SpectralField u = dft(flow.states[centers[c]]);
    EnergySample s;
    s.t = t[centers[c]];
    s.E0 = energy_E0(u, a);
    if (kind == IdentityKind::E0_R4) {
      s.R4 = remainder_R4(u, a, sign);
      remainder[c] = s.R4;
    } else {
      s.E1 = energy_E1(u, b4);
      s.R6 = remainder_R6(u, b4, sign, options.dealias);
      remainder[c] = s.R6;
    }
    rep.samples.push_back(s);
  }
  for (size_t h = 0; h < multiples.size(); ++h) {
    const size_t m = multiples[h];
    std::vector<double> rel;
    for (size_t c = 0; c < centers.size(); ++c) {
      const size_t i = centers[c];
      const double fd = (energy(i + m) - energy(i - m)) / (t[i + m] - t[i - m]);
      const double r = remainder[c];
      const double diff = std::abs(fd - r);
      rel.push_back(r != 0.0 ? diff / std::abs(r) : diff);
    }
    IdentityRow row;
    row.h = options.fd_steps[h];
    row.max_rel = *std::max_element(rel.begin(), rel.end());
    row.median_rel = median(rel);
    rep.rows.push_back(row);
  }
  if (rep.rows.size() >= 2 && rep.rows[0].max_rel > 0.0 && rep.rows[1].max_rel > 0.0)
    rep.order = std::log(rep.rows[0].max_rel / rep.rows[1].max_rel) / std::log(rep.rows[0].h / rep.rows[1].h);
  return rep;
}

EnergyReport energy_report(const FlowRecord& flow, const B4Evaluator& b4, int sign, int stride, bool dealias) {
  if (stride < 1) throw ConfigError("energy report stride must be positive");
  EnergyReport rep;
  rep.sign = sign;
  rep.symbol_tag = b4.symbol().tag();
  const SymbolA& a = b4.symbol();
  for (size_t i = 0; i < flow.times.size(); i += static_cast<size_t>(stride)) {
    const SpectralField u = dft(flow.states[i]);
    EnergySample s;
    s.t = flow.times[i];
    s.E0 = energy_E0(u, a);
    s.E1 = energy_E1(u, b4);
    s.R4 = remainder_R4(u, a, sign);
    s.R6 = remainder_R6(u, b4, sign, dealias);
    rep.samples.push_back(s);
  }
  return rep;
}

}  // namespace mkdv
