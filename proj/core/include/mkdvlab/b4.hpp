#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mkdvlab/symbol.hpp"

namespace mkdv {

/// The quartic multiplier b_4 = prefactor * Q on the hyperplane P_4, where
///
///   Q(xi) = (xi_1 a(xi_1) + ... + xi_4 a(xi_4)) / (xi_1^3 + ... + xi_4^3)
///
/// and xi_4 = -(xi_1 + xi_2 + xi_3). On P_4 the cubic sum factors as
/// 3 (xi_1 + xi_2)(xi_1 + xi_3)(xi_1 + xi_4), so Q is a second divided
/// difference of f(x) = x a(x) and extends smoothly across the zero set of
/// the pair sums. Q vanishes when every |xi_j| <= M.
class B4Evaluator {
 public:
  /// eps_rel in (0, 0.1]: pair sums below eps_rel * scale switch to limit forms,
  /// where scale = max(|xi_j|, M).
  B4Evaluator(SymbolA a, double prefactor, double eps_rel = 1e-3);

  const SymbolA& symbol() const noexcept { return a_; }
  double prefactor() const noexcept { return prefactor_; }
  double eps_rel() const noexcept { return eps_; }

  /// max(|xi_j|, M).
  double scale(double x1, double x2, double x3) const noexcept;
  /// |(xi_1+xi_2)(xi_1+xi_3)(xi_2+xi_3)| < eps_rel * scale^3.
  bool near_singular(double x1, double x2, double x3) const noexcept;

  /// Direct quotient Q; throws DomainError near the singular set.
  double core_reference(double x1, double x2, double x3) const;
  double reference(double x1, double x2, double x3) const { return prefactor_ * core_reference(x1, x2, x3); }

  /// Q evaluated through divided differences; total on P_4, exactly symmetric
  /// under permutations of (xi_1, ..., xi_4) and even under xi -> -xi.
  double core_stable(double x1, double x2, double x3) const;
  /// Four-argument form; the caller guarantees x1 + x2 + x3 + x4 = 0.
  double core_stable(const std::array<double, 4>& xi) const;
  double stable(double x1, double x2, double x3) const { return prefactor_ * core_stable(x1, x2, x3); }
  double operator()(double x1, double x2, double x3) const { return stable(x1, x2, x3); }

  /// g(x, y) = (x a(x) + y a(y)) / (x + y) with its limit on x + y = 0.
  double g(double x, double y, double scale) const;

 private:
  double f(double x) const { return x * a_(x); }
  double core_canonical(const std::array<double, 4>& x, double scale) const;
  double core_paired(const std::array<double, 4>& x, double scale) const;

  SymbolA a_;
  double prefactor_;
  double eps_;
};

/// Multiplier that makes d/dt (E_0 + E_1) free of quartic terms for
/// u_t + u_xxx + sign * (u^3)_x = 0: prefactor -sign / 2.
B4Evaluator make_flow_b4(const SymbolA& a, int sign, double eps_rel = 1e-3);

/// Dyadic zone of |xi|: the power of two nearest in log scale, at least M.
double dyadic_zone(double xi, double M) noexcept;

struct B4SizeSample {
  std::array<double, 4> xi{};
  std::array<double, 4> zones{};  ///< sorted N_1 <= N_2 <= N_3 <= N_4
  double value = 0.0;             ///< |Q(xi)|
  double bound = 0.0;             ///< a(N_2) N_4^{-2}
  double ratio = 0.0;
};

struct B4SizeReport {
  double constant = 0.0;  ///< max ratio over all samples
  std::size_t samples = 0;
  B4SizeSample worst;
};

/// Samples P_4 points with |xi_j| in dyadic zones N_1 <= N_2 <= N_3 drawn from
/// {M, 2M, ..., N_top} and measures |Q| / (a(N_2) N_4^{-2}) with zones
/// recomputed from the realized point.
B4SizeReport b4_size_sweep(const SymbolA& a, double N_top, int samples_per_cell, std::uint64_t seed);

/// Sampled audit of Q for one symbol. Relative residuals are measured against
/// the natural size of each expression (e.g. sum |xi_j a(xi_j)| for the identity).
struct B4CheckReport {
  std::size_t samples = 0;            ///< nonsingular points used
  std::size_t near_samples = 0;       ///< points within 1e-6 scale of the singular set
  double identity_max = 0.0;          ///< |Q sum xi^3 - sum xi a| / sum |xi a|
  double agreement_max = 0.0;         ///< |Q_stable - Q_reference| / max(|Q|, a(N_2) N_4^{-2})
  double symmetry_max = 0.0;          ///< over all 24 orderings, same normalization
  double evenness_max = 0.0;          ///< |Q(-xi) - Q(xi)|, same normalization
  double near_symmetry_max = 0.0;     ///< symmetry residual on near-singular points
  double factorization_max = 0.0;     ///< |sum xi^3 - 3 p12 p13 p14| / sum |xi|^3
  double printed_ratio_min = 0.0;     ///< sum xi^3 / ((xi1+xi2)(xi1+xi3)(xi2+xi3)), min and max
  double printed_ratio_max = 0.0;
  bool finite = true;                 ///< every stable evaluation finite
};

/// Points are drawn uniformly from [-span, span]^3, span = 4 * max(M, N) for
/// a_N symbols and 64 M otherwise.
B4CheckReport b4_check(const SymbolA& a, int samples, int near_samples, std::uint64_t seed, double eps_rel = 1e-3);

}  // namespace mkdv
