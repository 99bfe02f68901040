#include "mkdvlab/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "mkdvlab/airy.hpp"
#include "mkdvlab/errors.hpp"
#include "mkdvlab/littlewood_paley.hpp"
#include "mkdvlab/mixed_norm.hpp"
#include "mkdvlab/parallel.hpp"
#include "mkdvlab/random_data.hpp"

namespace mkdv {

bool admissible(double p, double q) noexcept {
  if (!(p >= 4.0) || !(q >= 2.0)) return false;
  const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
  const double iq = std::isinf(q) ? 0.0 : 1.0 / q;
  return std::abs(2.0 * ip + iq - 0.5) <= 1e-12;
}

void require_admissible(double p, double q) {
  if (!admissible(p, q)) {
    std::ostringstream msg;
    msg << "exponent pair (" << p << ", " << q << ") is not admissible: need 2/p + 1/q = 1/2, p >= 4, q >= 2";
    throw DomainError(msg.str());
  }
}

namespace {

int next_pow2(double x) {
  int n = 64;
  while (n < x) n *= 2;
  return n;
}

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

LinearSweepSetup linear_sweep_setup(double N) {
  if (!(N >= 1.0)) throw DomainError("sweep block N must be >= 1");
  const double L = 32.0 * std::numbers::pi;
  const int n = next_pow2(3.0 * N * L / std::numbers::pi);
  const double top = 2.0 * N;
  const double horizon = std::min(1.0, L / (12.0 * top * top));
  const int space_samples = std::max(257, static_cast<int>(std::ceil(horizon * top * top * top)) + 1);
  return LinearSweepSetup{GridSpec(L, n), horizon, 2.0, L / 4.0, 257, space_samples};
}

SpectralField linear_sweep_data(const LinearSweepSetup& setup, double N, std::uint64_t seed) {
  const LPPartition part = LPPartition::for_grid(setup.grid, 1.0);
  Rng rng(seed);
  SpectralField phi = random_block_data(setup.grid, part, N, rng);
  phi = envelope_localize(phi, setup.envelope_center, setup.envelope_width);
  return normalize_l2(lp_project(phi, part, N));
}

LinearRatios strichartz_ratios(const SpectralField& phi, double N, ExponentPair pq, double horizon, int samples) {
  require_admissible(pq.p, pq.q);
  LinearRatios out;
  const double nrm = l2_norm(phi);
  if (nrm == 0.0) return out;
  const std::vector<double> times = uniform_times(0.0, horizon, samples);
  const SpectralField dphi = fractional_derivative(phi, inv(pq.p));
  MixedNormAccumulator raw(times, phi.grid, pq.p, pq.q, NormOrder::TimeOuter);
  MixedNormAccumulator blk(times, phi.grid, pq.p, pq.q, NormOrder::TimeOuter);
  for (size_t j = 0; j < times.size(); ++j) {
    raw.add(j, idft(airy_propagate(dphi, times[j])).samples);
    blk.add(j, idft(airy_propagate(phi, times[j])).samples);
  }
  out.raw = raw.value() / nrm;
  out.normalized = std::pow(N, inv(pq.p)) * blk.value() / nrm;
  return out;
}

std::vector<LinearRatios> smoothing_ratios(const SpectralField& phi, double N, const std::vector<ExponentPair>& pairs,
                                           double horizon, int samples) {
  for (const auto& pq : pairs) require_admissible(pq.p, pq.q);
  std::vector<LinearRatios> out(pairs.size());
  const double nrm = l2_norm(phi);
  if (nrm == 0.0) return out;
  const std::vector<double> times = uniform_times(0.0, horizon, samples);
  std::vector<SpectralField> dphi;
  std::vector<MixedNormAccumulator> raw, blk;
  for (const auto& pq : pairs) {
    dphi.push_back(fractional_derivative(phi, 1.0 - 5.0 * inv(pq.p)));
    raw.emplace_back(times, phi.grid, pq.p, pq.q, NormOrder::SpaceOuter);
    blk.emplace_back(times, phi.grid, pq.p, pq.q, NormOrder::SpaceOuter);
  }
  for (size_t j = 0; j < times.size(); ++j) {
    const RealField u = idft(airy_propagate(phi, times[j]));
    for (size_t k = 0; k < pairs.size(); ++k) {
      blk[k].add(j, u.samples);
      raw[k].add(j, idft(airy_propagate(dphi[k], times[j])).samples);
    }
  }
  for (size_t k = 0; k < pairs.size(); ++k) {
    out[k].raw = raw[k].value() / nrm;
    out[k].normalized = std::pow(N, 1.0 - 5.0 * inv(pairs[k].p)) * blk[k].value() / nrm;
  }
  return out;
}

namespace {

using TrialFn = std::function<std::vector<SweepRecord>(double N, int trial, std::uint64_t seed)>;

std::vector<SweepRecord> run_trials(const std::vector<double>& scales, int trials, std::uint64_t seed,
                                    const TrialFn& fn) {
  if (trials < 1) throw ConfigError("sweeps need at least one trial");
  const size_t total = scales.size() * static_cast<size_t>(trials);
  std::vector<std::vector<SweepRecord>> slots(total);
  parallel_for(total, [&](size_t idx) {
    const size_t si = idx / static_cast<size_t>(trials);
    const int trial = static_cast<int>(idx % static_cast<size_t>(trials));
    const double N = scales[si];
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(std::llround(N * 1024.0)),
                                        static_cast<std::uint64_t>(trial));
    slots[idx] = fn(N, trial, s);
  });
  std::vector<SweepRecord> out;
  for (auto& v : slots) out.insert(out.end(), v.begin(), v.end());
  // Stable order: pair, then scale, then trial.
  std::stable_sort(out.begin(), out.end(), [](const SweepRecord& a, const SweepRecord& b) {
    if (a.p != b.p) return a.p > b.p;
    if (a.q != b.q) return a.q < b.q;
    return false;
  });
  return out;
}

}  // namespace

std::vector<SweepRecord> strichartz_sweep(const SweepOptions& options) {
  for (const auto& pq : options.pairs) require_admissible(pq.p, pq.q);
  return run_trials(options.scales, options.trials, options.seed, [&](double N, int trial, std::uint64_t s) {
    const LinearSweepSetup setup = linear_sweep_setup(N);
    const SpectralField phi = linear_sweep_data(setup, N, s);
    std::vector<SweepRecord> recs;
    for (const auto& pq : options.pairs) {
      const LinearRatios r = strichartz_ratios(phi, N, pq, setup.horizon, setup.time_samples_time_outer);
      recs.push_back(SweepRecord{"strichartz", pq.p, pq.q, N, 0.0, trial, s, r.raw, r.normalized});
    }
    return recs;
  });
}

std::vector<SweepRecord> smoothing_maximal_sweep(const SweepOptions& options) {
  for (const auto& pq : options.pairs) require_admissible(pq.p, pq.q);
  return run_trials(options.scales, options.trials, options.seed, [&](double N, int trial, std::uint64_t s) {
    const LinearSweepSetup setup = linear_sweep_setup(N);
    const SpectralField phi = linear_sweep_data(setup, N, s);
    const std::vector<LinearRatios> rs =
        smoothing_ratios(phi, N, options.pairs, setup.horizon, setup.time_samples_space_outer);
    std::vector<SweepRecord> recs;
    for (size_t k = 0; k < rs.size(); ++k)
      recs.push_back(SweepRecord{"smoothing", options.pairs[k].p, options.pairs[k].q, N, 0.0, trial, s, rs[k].raw,
                                 rs[k].normalized});
    return recs;
  });
}

BilinearGeometry bilinear_geometry(double M1, double M2) {
  if (!(M1 > 0.0) || !std::isfinite(M1)) throw DomainError("bilinear geometry: |xi_1 + xi_2| ~ M1 needs M1 > 0");
  if (!(M2 > 0.0) || !std::isfinite(M2)) throw DomainError("bilinear geometry: |xi_1 - xi_2| ~ M2 needs M2 > 0");
  BilinearGeometry g{M1, M2, 0.5 * (M1 + M2), 0.5 * (M1 - M2), std::min(M1, M2) / 8.0, 0.0, 0.0,
                     GridSpec(1.0, 4)};
  // Sums of the bands lie in [M1 - 2d, M1 + 2d], differences in [M2 - 2d, M2 + 2d].
  if (std::abs(g.center1) - std::abs(g.center2) <= 2.0 * g.half_width)
    throw DomainError("bilinear geometry: bands overlap, so |xi_1 - xi_2| ~ M2 cannot hold");
  g.envelope_width = 4.0 / g.half_width;
  g.horizon = 8.0 * g.envelope_width / (3.0 * M1 * M2);
  const double xi_top = std::abs(g.center1) + g.half_width;
  const double travel = 3.0 * xi_top * xi_top * g.horizon;
  const double L = std::max({4.0 * travel, 16.0 * g.envelope_width, 8.0 * std::numbers::pi});
  // |uv|^2 has wavenumbers up to 4 k_top; the trapezoid sum is exact below n.
  const int n = next_pow2(1.05 * 2.0 * xi_top * L / std::numbers::pi);
  g.grid = GridSpec(L, n);
  return g;
}

std::pair<SpectralField, SpectralField> bilinear_data(const BilinearGeometry& geo, std::uint64_t seed) {
  Rng rng(seed);
  const double c = geo.grid.length() / 2.0;
  auto band = [&](double center) {
    const double lo = std::max(0.0, std::abs(center) - geo.half_width);
    const double hi = std::abs(center) + geo.half_width;
    SpectralField f = random_band_data(geo.grid, lo, hi, rng);
    f = envelope_localize(f, c, geo.envelope_width);
    return normalize_l2(indicator_project(f, lo, hi));
  };
  SpectralField phi = band(geo.center1);
  SpectralField psi = band(geo.center2);
  return {std::move(phi), std::move(psi)};
}

LinearRatios bilinear_ratios(const SpectralField& phi, const SpectralField& psi, double M1, double M2, double horizon,
                             int samples) {
  require_same_grid(phi.grid, psi.grid);
  LinearRatios out;
  const double denom = l2_norm(phi) * l2_norm(psi);
  if (denom == 0.0) return out;
  const std::vector<double> times = uniform_times(0.0, horizon, samples);
  MixedNormAccumulator acc(times, phi.grid, 2.0, 2.0, NormOrder::TimeOuter);
  std::vector<double> prod(static_cast<size_t>(phi.grid.size()));
  for (size_t j = 0; j < times.size(); ++j) {
    const RealField u = idft(airy_propagate(phi, times[j]));
    const RealField v = idft(airy_propagate(psi, times[j]));
    for (size_t i = 0; i < prod.size(); ++i) prod[i] = u.samples[i] * v.samples[i];
    acc.add(j, prod);
  }
  out.raw = acc.value() / denom;
  out.normalized = std::sqrt(M1 * M2) * out.raw;
  return out;
}

std::vector<SweepRecord> bilinear_sweep(const BilinearOptions& options) {
  if (options.trials < 1) throw ConfigError("sweeps need at least one trial");
  std::vector<BilinearGeometry> geos;
  for (const auto& [M1, M2] : options.points) geos.push_back(bilinear_geometry(M1, M2));
  const size_t trials = static_cast<size_t>(options.trials);
  std::vector<SweepRecord> out(geos.size() * trials);
  parallel_for(out.size(), [&](size_t idx) {
    const BilinearGeometry& g = geos[idx / trials];
    const int trial = static_cast<int>(idx % trials);
    const std::uint64_t s = derive_seed(options.seed, static_cast<std::uint64_t>(std::llround(g.M1 * 1024.0)),
                                        derive_seed(static_cast<std::uint64_t>(std::llround(g.M2 * 1024.0)),
                                                    static_cast<std::uint64_t>(trial)));
    const auto [phi, psi] = bilinear_data(g, s);
    const LinearRatios r = bilinear_ratios(phi, psi, g.M1, g.M2, g.horizon, options.time_samples);
    out[idx] = SweepRecord{"bilinear", 2.0, 2.0, g.M1, g.M2, trial, s, r.raw, r.normalized};
  });
  return out;
}

std::vector<SweepSummary> summarize(const std::vector<SweepRecord>& records) {
  struct Key {
    std::string est;
    double p, q, fixed;
    bool operator<(const Key& o) const {
      return std::tie(est, p, q, fixed) < std::tie(o.est, o.p, o.q, o.fixed);
    }
  };
  std::vector<Key> order;
  std::map<Key, std::map<double, double>> groups;
  for (const SweepRecord& r : records) {
    const bool bil = r.estimate == "bilinear";
    const Key k{r.estimate, r.p, r.q, bil ? (r.scale1 == r.scale2 ? 0.0 : r.scale1) : 0.0};
    const double scale = bil ? r.scale2 : r.scale1;
    if (!groups.count(k)) order.push_back(k);
    auto& m = groups[k];
    auto it = m.find(scale);
    if (it == m.end())
      m.emplace(scale, r.normalized_ratio);
    else
      it->second = std::max(it->second, r.normalized_ratio);
  }
  std::vector<SweepSummary> out;
  for (const Key& k : order) {
    SweepSummary s;
    s.estimate = k.est;
    s.p = k.p;
    s.q = k.q;
    s.fixed_scale = k.fixed;
    std::vector<double> maxima;
    for (const auto& [scale, mx] : groups[k]) {
      s.scale_max.emplace_back(scale, mx);
      maxima.push_back(mx);
    }
    s.max = *std::max_element(maxima.begin(), maxima.end());
    s.median = median_of(maxima);
    s.spread = s.median > 0.0 ? s.max / s.median : (s.max == 0.0 ? 1.0 : kInf);
    s.bounded = s.spread <= 4.0;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace mkdv
