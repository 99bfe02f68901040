#pragma once

#include <optional>
#include <vector>

#include "mkdvlab/grid.hpp"
#include "mkdvlab/littlewood_paley.hpp"
#include "mkdvlab/symbol.hpp"

namespace mkdv {

/// Hilbert norm used to measure increments of a path.
class PathMetric {
 public:
  enum class Kind { L2, Sobolev, Symbol };

  static PathMetric l2();
  static PathMetric sobolev(double s, double M);
  static PathMetric symbol(const SymbolA& a);

  Kind kind() const noexcept { return kind_; }
  double s() const noexcept { return s_; }
  double M() const noexcept { return M_; }

  double norm(const SpectralField& f) const;
  /// Per-coefficient weights w_k with ||f||^2 = (1/L) sum w_k |f_k|^2.
  std::vector<double> weights(const GridSpec& grid) const;

 private:
  PathMetric(Kind kind, double s, double M, std::optional<SymbolA> a);

  Kind kind_;
  double s_;
  double M_;
  std::optional<SymbolA> a_;
};

/// A path v : {t_0 < ... < t_K} -> H sampled at finitely many times.
struct PathSample {
  std::vector<double> times;
  std::vector<SpectralField> values;
  PathMetric metric = PathMetric::l2();

  /// Throws DomainError on K < 1, non-increasing times, size or grid mismatch.
  void validate() const;
};

/// Exact p-variation over sub-partitions of the sample points:
/// best(j) = max_{i<j} best(i) + ||v_j - v_i||^p, result best(K)^{1/p}.
double variation_norm(const PathSample& path, double p);

/// Replaces v(t_j) by exp(t_j d_x^3) v(t_j), turning free Airy solutions into
/// constant paths.
PathSample airy_pullback(const PathSample& path);
/// Inverse of airy_pullback.
PathSample airy_pushforward(const PathSample& path);

/// ||v||_{V^p_A} = ||airy_pullback(v)||_{V^p}.
double airy_variation_norm(const PathSample& path, double p);

struct XsmBlock {
  double N = 0.0;
  double window = 0.0;     ///< window length actually used
  int windows = 0;         ///< windows visited over both staggered partitions
  double sup = 0.0;        ///< sup over windows of ||v(a)|| + V^2_A over the window
};

struct XsmDiagnostic {
  double s = 0.0;
  double M = 1.0;
  double window_exponent = 0.0;
  std::vector<XsmBlock> blocks;
  double aggregate = 0.0;  ///< sqrt of the sum of squared block sups
};

struct BlockPath {
  double N;
  PathSample path;
};

/// Windowed V^2_A proxy for the X^s_M norm.
///
/// Each block uses windows of length clamp(N^window_exponent, dt, horizon)
/// laid out in two partitions staggered by half a window. Paths are measured
/// in H^s_M regardless of their own metric. Throws ConfigError if any sample
/// spacing exceeds half the block's window.
XsmDiagnostic xsm_diagnostic(const std::vector<BlockPath>& blocks, double s, double M, double window_exponent);

/// Splits a flow into Littlewood-Paley blocks with base M and runs xsm_diagnostic.
/// The default exponent is 4s - 1.
XsmDiagnostic xsm_diagnostic(const PathSample& flow, double s, double M,
                             std::optional<double> window_exponent = std::nullopt);

}  // namespace mkdv
