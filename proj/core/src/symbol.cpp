#include "mkdvlab/symbol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "mkdvlab/errors.hpp"

namespace mkdv {
namespace {

// Width (in the normalized blend variable) of the ramp and release regions.
constexpr double kRamp = 0.2;

double smoothstep(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return x * x * (3.0 - 2.0 * x);
}

// Log-profile of a_N relative to N^{2s} on the blend region.
class ANProfile {
 public:
  ANProfile(double N, double s) : N_(N), s_(s) {
    u0_ = std::log1p(N * N);
    u1_ = std::log1p(4.0 * N * N);
    width_ = u1_ - u0_;
    const double e1 = std::exp(u1_);
    end_slope_ = -0.25 * e1 / (e1 - 1.0);
    end_curvature_ = 0.25 * e1 / ((e1 - 1.0) * (e1 - 1.0));
    end_value_ = 0.5 * std::log(N) - 0.25 * std::log(e1 - 1.0);
    bump_ = 0.0;
    const double base_area = integral(1.0);
    bump_ = 1.0;
    const double with_bump = integral(1.0);
    const double bump_area = with_bump - base_area;
    bump_ = (end_value_ / width_ - base_area) / bump_area;
    core_ = std::pow(N, 2.0 * s);
    outer_ = std::pow(N, 0.5 + 2.0 * s);
  }

  double operator()(double xi) const {
    const double ax = std::abs(xi);
    if (ax <= N_) return core_;
    if (ax >= 2.0 * N_) return outer_ / std::sqrt(ax);
    const double tau = (std::log1p(ax * ax) - u0_) / width_;
    return core_ * std::exp(width_ * integral(tau));
  }

 private:
  // u-slope of the log-profile at normalized position tau in [0, 1].
  double slope(double tau) const {
    const double linear = end_slope_ + end_curvature_ * width_ * (tau - 1.0);
    const double ramp = smoothstep(tau / kRamp);
    const double plateau = ramp * smoothstep((1.0 - tau) / kRamp);
    return linear * ramp + bump_ * plateau;
  }

  // Integral of slope over [0, tau]; exact because slope is a polynomial of
  // degree <= 4 on each of [0, r], [r, 1 - r], [1 - r, 1].
  double integral(double tau) const {
    static constexpr std::array<double, 3> nodes{-0.7745966692414834, 0.0, 0.7745966692414834};
    static constexpr std::array<double, 3> weights{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
    const std::array<double, 4> breaks{0.0, kRamp, 1.0 - kRamp, 1.0};
    double total = 0.0;
    for (size_t piece = 0; piece < 3; ++piece) {
      const double lo = breaks[piece];
      const double hi = std::min(breaks[piece + 1], tau);
      if (hi <= lo) break;
      const double half = 0.5 * (hi - lo);
      const double mid = 0.5 * (hi + lo);
      for (size_t q = 0; q < 3; ++q) total += weights[q] * half * slope(mid + half * nodes[q]);
    }
    return total;
  }

  double N_, s_;
  double u0_, u1_, width_;
  double end_slope_, end_curvature_, end_value_;
  double bump_;
  double core_, outer_;
};

}  // namespace

SymbolA::SymbolA(double M, std::function<double(double)> eval, std::string tag, std::optional<ANTag> an)
    : M_(M), eval_(std::move(eval)), tag_(std::move(tag)), an_(an) {
  if (!(M >= 1.0) || !std::isfinite(M)) throw DomainError("symbol base M must be >= 1");
}

SymbolA SymbolA::constant(double value, double M) {
  if (!(value > 0.0)) throw DomainError("constant symbol must be positive");
  std::ostringstream tag;
  tag << "const(" << value << ")";
  return SymbolA(M, [value](double) { return value; }, tag.str(), std::nullopt);
}

SymbolA SymbolA::custom(double M, std::function<double(double)> eval, std::string tag) {
  return SymbolA(M, std::move(eval), std::move(tag), std::nullopt);
}

SymbolA make_aN(double N, double s, double M) {
  if (!(M >= 1.0)) throw DomainError("a_N requires M >= 1");
  if (!(N >= M)) throw DomainError("a_N requires N >= M");
  if (!(s <= 0.0)) throw DomainError("a_N is only defined here for s <= 0");
  auto profile = std::make_shared<ANProfile>(N, s);
  std::ostringstream tag;
  tag << "aN(N=" << N << ",s=" << s << ",M=" << M << ")";
  SymbolA a(M, [profile](double xi) { return (*profile)(xi); }, tag.str(), ANTag{N, s});
  const SymbolClassReport report = check_symbol_class(a, 64.0 * N);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "a_N failed class audit: even=" << report.even << " core=" << report.constant_core
        << " monotone=" << report.nonincreasing << " slope=[" << report.min_log_slope << ", "
        << report.max_log_slope << "]";
    throw ConstructionError(msg.str());
  }
  return a;
}

SymbolClassReport check_symbol_class(const SymbolA& a, double xi_top) {
  SymbolClassReport r;
  const double M = a.M();
  const double a0 = a(0.0);
  for (int i = 0; i <= 64; ++i) {
    const double xi = M * i / 64.0;
    if (std::abs(a(xi) - a0) > 1e-14 * a0) r.constant_core = false;
  }

  // Log-spaced sample from M to xi_top, uniform in u = log(1 + xi^2).
  const double ulo = std::log1p(M * M);
  const double uhi = std::log1p(xi_top * xi_top);
  const int samples = 4000;
  const double h = 1e-5;
  double prev = a(M);
  r.min_log_slope = 0.0;
  r.max_log_slope = -1.0;
  for (int i = 0; i <= samples; ++i) {
    const double u = ulo + (uhi - ulo) * i / samples;
    const double xi = std::sqrt(std::expm1(u));
    const double v = a(xi);
    if (!(v > 0.0) || !std::isfinite(v)) {
      r.nonincreasing = false;
      continue;
    }
    if (std::abs(a(-xi) - v) > 1e-15 * v) r.even = false;
    if (v > prev * (1.0 + 1e-14)) r.nonincreasing = false;
    prev = v;
    const double xp = std::sqrt(std::expm1(u + h));
    const double xm = std::sqrt(std::expm1(std::max(u - h, 0.0)));
    const double du = std::log1p(xp * xp) - std::log1p(xm * xm);
    const double slope = (std::log(a(xp)) - std::log(a(xm))) / du;
    r.min_log_slope = std::min(r.min_log_slope, slope);
    r.max_log_slope = std::max(r.max_log_slope, slope);
  }
  r.log_slope_in_range = r.min_log_slope >= -0.5 - 1e-6 && r.max_log_slope <= 1e-6;
  return r;
}

}  // namespace mkdv
