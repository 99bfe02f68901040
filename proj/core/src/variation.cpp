#include "mkdvlab/variation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mkdvlab/airy.hpp"
#include "mkdvlab/errors.hpp"
#include "mkdvlab/parallel.hpp"

namespace mkdv {

PathMetric::PathMetric(Kind kind, double s, double M, std::optional<SymbolA> a)
    : kind_(kind), s_(s), M_(M), a_(std::move(a)) {}

PathMetric PathMetric::l2() { return PathMetric(Kind::L2, 0.0, 1.0, std::nullopt); }

PathMetric PathMetric::sobolev(double s, double M) {
  if (!(M > 0.0)) throw DomainError("H^s_M metric requires M > 0");
  return PathMetric(Kind::Sobolev, s, M, std::nullopt);
}

PathMetric PathMetric::symbol(const SymbolA& a) { return PathMetric(Kind::Symbol, 0.0, a.M(), a); }

std::vector<double> PathMetric::weights(const GridSpec& grid) const {
  std::vector<double> w(static_cast<size_t>(grid.size()), 1.0);
  for (int i = 0; i < grid.size(); ++i) {
    const double xi = grid.xi(i);
    double& wi = w[static_cast<size_t>(i)];
    switch (kind_) {
      case Kind::L2: break;
      case Kind::Sobolev: wi = s_ == 0.0 ? 1.0 : std::pow(xi * xi + M_, s_); break;
      case Kind::Symbol: wi = (*a_)(xi); break;
    }
  }
  return w;
}

double PathMetric::norm(const SpectralField& f) const {
  const std::vector<double> w = weights(f.grid);
  double sum = 0.0;
  for (size_t i = 0; i < w.size(); ++i) sum += w[i] * std::norm(f.coeffs[i]);
  return std::sqrt(sum / f.grid.length());
}

void PathSample::validate() const {
  if (times.size() < 2) throw DomainError("a path needs at least two samples");
  if (values.size() != times.size()) throw DomainError("path times and values differ in length");
  for (size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw DomainError("path times must be strictly increasing");
    require_same_grid(values[0].grid, values[i].grid);
  }
}

namespace {

double distance(const SpectralField& a, const SpectralField& b, const std::vector<double>& w, double inv_len) {
  double sum = 0.0;
  for (size_t k = 0; k < w.size(); ++k) sum += w[k] * std::norm(a.coeffs[k] - b.coeffs[k]);
  return std::sqrt(sum * inv_len);
}

double increment_pow(double d, double p) { return p == 2.0 ? d * d : std::pow(d, p); }

// Variation of values[lo..hi] (inclusive) by the O(K^2) dynamic program.
double dp_variation(const std::vector<SpectralField>& values, const std::vector<double>& w, double inv_len,
                    size_t lo, size_t hi, double p) {
  if (hi <= lo) return 0.0;
  const size_t k = hi - lo + 1;
  std::vector<double> best(k, 0.0);
  for (size_t j = 1; j < k; ++j) {
    double b = 0.0;
    for (size_t i = 0; i < j; ++i) {
      const double d = distance(values[lo + i], values[lo + j], w, inv_len);
      b = std::max(b, best[i] + increment_pow(d, p));
    }
    best[j] = b;
  }
  return std::pow(best[k - 1], 1.0 / p);
}

PathSample propagate_path(const PathSample& path, double sign) {
  path.validate();
  PathSample out = path;
  for (size_t j = 0; j < path.times.size(); ++j) out.values[j] = airy_propagate(path.values[j], sign * path.times[j]);
  return out;
}

}  // namespace

double variation_norm(const PathSample& path, double p) {
  if (!(p >= 1.0)) throw DomainError("p-variation requires p >= 1");
  path.validate();
  const GridSpec& g = path.values.front().grid;
  return dp_variation(path.values, path.metric.weights(g), 1.0 / g.length(), 0, path.values.size() - 1, p);
}

PathSample airy_pullback(const PathSample& path) { return propagate_path(path, -1.0); }

PathSample airy_pushforward(const PathSample& path) { return propagate_path(path, 1.0); }

double airy_variation_norm(const PathSample& path, double p) { return variation_norm(airy_pullback(path), p); }

namespace {

XsmBlock block_diagnostic(const BlockPath& bp, double s, double M, double exponent) {
  const PathSample pulled = airy_pullback(bp.path);
  const std::vector<double>& t = pulled.times;
  const GridSpec& g = pulled.values.front().grid;
  const PathMetric metric = PathMetric::sobolev(s, M);
  const std::vector<double> w = metric.weights(g);
  const double inv_len = 1.0 / g.length();

  const double t0 = t.front();
  const double t1 = t.back();
  const double horizon = t1 - t0;
  double max_dt = 0.0;
  for (size_t i = 1; i < t.size(); ++i) max_dt = std::max(max_dt, t[i] - t[i - 1]);
  const double window = std::clamp(std::pow(bp.N, exponent), max_dt, horizon);
  if (max_dt > 0.5 * window * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "time sampling too coarse for block N=" << bp.N << ": window " << window << " requires dt <= "
        << 0.5 * window << " (have " << max_dt << ")";
    throw ConfigError(msg.str());
  }

  XsmBlock rec;
  rec.N = bp.N;
  rec.window = window;
  const double tol = 1e-12 * std::max(1.0, horizon);
  for (double offset : {0.0, 0.5 * window}) {
    for (int k = offset > 0.0 ? -1 : 0;; ++k) {
      const double a = t0 + offset + k * window;
      if (a >= t1 - tol && !(k == 0 && offset == 0.0)) break;
      const double b = a + window;
      const bool closed = b >= t1 - tol;
      size_t lo = 0;
      while (lo < t.size() && t[lo] < a - tol) ++lo;
      size_t hi = lo;
      bool any = false;
      for (size_t i = lo; i < t.size(); ++i) {
        if (t[i] < b - tol || (closed && i + 1 == t.size())) {
          hi = i;
          any = true;
        } else {
          break;
        }
      }
      if (!any) continue;
      const double start_norm = distance(pulled.values[lo], SpectralField(g), w, inv_len);
      const double value = start_norm + dp_variation(pulled.values, w, inv_len, lo, hi, 2.0);
      rec.sup = std::max(rec.sup, value);
      ++rec.windows;
      if (closed) break;
    }
  }
  return rec;
}

}  // namespace

XsmDiagnostic xsm_diagnostic(const std::vector<BlockPath>& blocks, double s, double M, double window_exponent) {
  if (!(M >= 1.0)) throw DomainError("X^s_M diagnostic requires M >= 1");
  XsmDiagnostic out;
  out.s = s;
  out.M = M;
  out.window_exponent = window_exponent;
  out.blocks.resize(blocks.size());
  parallel_for(blocks.size(), [&](size_t i) { out.blocks[i] = block_diagnostic(blocks[i], s, M, window_exponent); });
  std::vector<double> squares;
  squares.reserve(out.blocks.size());
  for (const XsmBlock& b : out.blocks) squares.push_back(b.sup * b.sup);
  out.aggregate = std::sqrt(pairwise_sum(squares));
  return out;
}

XsmDiagnostic xsm_diagnostic(const PathSample& flow, double s, double M, std::optional<double> window_exponent) {
  flow.validate();
  const LPPartition part = LPPartition::for_grid(flow.values.front().grid, M);
  std::vector<BlockPath> blocks;
  for (double N : part.blocks()) {
    BlockPath bp{N, PathSample{flow.times, {}, PathMetric::sobolev(s, M)}};
    bp.path.values.reserve(flow.values.size());
    for (const SpectralField& v : flow.values) bp.path.values.push_back(lp_project(v, part, N));
    blocks.push_back(std::move(bp));
  }
  return xsm_diagnostic(blocks, s, M, window_exponent.value_or(4.0 * s - 1.0));
}

}  // namespace mkdv
