#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace mkdv {

/// Parameters of a symbol built by make_aN.
struct ANTag {
  double N;
  double s;
};

/// Even positive symbol a(xi) of class S_M: constant on |xi| <= M,
/// nonincreasing in |xi|, with d log a / d log(1 + xi^2) in [-1/2, 0].
class SymbolA {
 public:
  static SymbolA constant(double value, double M = 1.0);
  /// Wraps an arbitrary evaluator; class membership is the caller's claim and
  /// can be audited with check_symbol_class.
  static SymbolA custom(double M, std::function<double(double)> eval, std::string tag);

  double operator()(double xi) const { return eval_(xi); }
  double M() const noexcept { return M_; }
  const std::optional<ANTag>& an_tag() const noexcept { return an_; }
  const std::string& tag() const noexcept { return tag_; }

 private:
  friend SymbolA make_aN(double N, double s, double M);
  SymbolA(double M, std::function<double(double)> eval, std::string tag, std::optional<ANTag> an);

  double M_;
  std::function<double(double)> eval_;
  std::string tag_;
  std::optional<ANTag> an_;
};

/// a_N(xi) = N^{2s} for |xi| <= N and N^{1/2 + 2s} |xi|^{-1/2} for |xi| >= 2N.
///
/// On N < |xi| < 2N the log-symbol is a C^2 piecewise-polynomial blend in the
/// variable u = log(1 + xi^2): its u-slope ramps from 0 to the slope of the
/// outer closed form, with a plateau bump sized so the blend lands exactly on
/// the closed form at 2N. The slope stays in [-1/2, 0] for every N >= 1.
///
/// Requires N >= M >= 1 and s <= 0; throws DomainError otherwise and
/// ConstructionError if the sampled class audit fails.
SymbolA make_aN(double N, double s, double M);

struct SymbolClassReport {
  bool even = true;
  bool constant_core = true;
  bool nonincreasing = true;
  bool log_slope_in_range = true;
  double min_log_slope = 0.0;
  double max_log_slope = 0.0;

  bool ok() const noexcept { return even && constant_core && nonincreasing && log_slope_in_range; }
};

/// Sampled audit of the S_M properties on [0, xi_top]. The log-slope is taken
/// by central finite differences in log(1 + xi^2) with tolerance 1e-6.
SymbolClassReport check_symbol_class(const SymbolA& a, double xi_top);

}  // namespace mkdv
