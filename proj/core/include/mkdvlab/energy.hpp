#pragma once

#include <string>
#include <vector>

#include "mkdvlab/b4.hpp"
#include "mkdvlab/grid.hpp"
#include "mkdvlab/symbol.hpp"

namespace mkdv {

struct FlowRecord;

/// Conventions for u_t + u_xxx + sign * (u^3)_x = 0 with coefficients hat u_k
/// and lattice sums over P_4 weighted by L^{-3}:
///
///   E_0 = (1/L) sum a(xi) |hat u|^2
///   R_4 = 2 sign (1/L) sum Re[i xi a(xi) hat u conj(hat w)],   w = u^3
///   E_1 = L^{-3} sum_{P_4} b_4 hat u_1 hat u_2 hat u_3 hat u_4
///   R_6 = -4 sign L^{-3} sum_{P_4} b_4(xi_1, xi_2, xi_3, xi_4) i xi_4 hat w_4 hat u_1 hat u_2 hat u_3
///
/// With b_4 from make_flow_b4 these satisfy d/dt E_0 = R_4 and
/// d/dt (E_0 + E_1) = R_6 along the flow.

double energy_E0(const SpectralField& u, const SymbolA& a);
double energy_E0(const RealField& u, const SymbolA& a);

/// O(n log n) pairing with the exact (unaliased) cube.
double remainder_R4(const SpectralField& u, const SymbolA& a, int sign);
double remainder_R4(const RealField& u, const SymbolA& a, int sign);

/// A real multilinear sum together with the size of its discarded imaginary part.
struct MultilinearValue {
  double value = 0.0;
  double imag_residual = 0.0;  ///< |Im S| / sum |terms| (0 for an empty sum)
  long long active = 0;        ///< number of active modes of u
};

/// Largest active mode count accepted by the quartic sums (n_active^3 <= 1e9).
inline constexpr long long kMaxActiveModes = 1000;
/// Coefficients below this fraction of the largest one are treated as zero.
inline constexpr double kActiveThreshold = 1e-14;

/// Triple sum over active (k_1, k_2, k_3) with k_4 = -(k_1 + k_2 + k_3).
/// Throws BudgetError when the active count exceeds kMaxActiveModes.
MultilinearValue energy_E1_detailed(const SpectralField& u, const B4Evaluator& b4);
double energy_E1(const SpectralField& u, const B4Evaluator& b4);
double energy_E1(const RealField& u, const B4Evaluator& b4);

/// Uses hat w = cube_spectrum(u, dealias), matching the solver's source term.
MultilinearValue remainder_R6_detailed(const SpectralField& u, const B4Evaluator& b4, int sign, bool dealias = true);
double remainder_R6(const SpectralField& u, const B4Evaluator& b4, int sign, bool dealias = true);
double remainder_R6(const RealField& u, const B4Evaluator& b4, int sign, bool dealias = true);

/// |E_1(u)| / (||u||^2_{H^a} ||u||^2_{H^{-1/2}_M}); 0 for the zero field.
double e1_bound_probe(const SpectralField& u, const B4Evaluator& b4, double M);

struct EnergySample {
  double t = 0.0;
  double E0 = 0.0;
  double E1 = 0.0;
  double R4 = 0.0;
  double R6 = 0.0;
};

struct EnergyReport {
  std::vector<EnergySample> samples;
  int sign = 1;
  std::string symbol_tag;
};

enum class IdentityKind { E0_R4, E0E1_R6 };

struct IdentityOptions {
  /// Finite-difference half-steps; each must be a multiple of the record spacing.
  std::vector<double> fd_steps{1e-3, 5e-4};
  /// Interior evaluation times, spread evenly over the admissible range.
  int max_points = 5;
  bool dealias = true;
};

struct IdentityRow {
  double h = 0.0;
  double max_rel = 0.0;
  double median_rel = 0.0;
};

struct IdentityReport {
  IdentityKind kind = IdentityKind::E0_R4;
  std::vector<IdentityRow> rows;   ///< one per finite-difference step
  double order = 0.0;              ///< log2 decay of max_rel between the first two steps
  std::vector<EnergySample> samples;  ///< remainder values at the evaluation times
};

/// Compares the central difference (E(t+h) - E(t-h)) / (2h) of E_0 or E_0 + E_1
/// with R_4 or R_6 at interior record times. Throws ConfigError when a step is
/// not a multiple of the record spacing or the record is too short.
IdentityReport energy_identity_check(const FlowRecord& flow, const B4Evaluator& b4, IdentityKind kind, int sign,
                                     const IdentityOptions& options = {});

/// E_0, E_1, R_4, R_6 at every record time (or every stride-th one).
EnergyReport energy_report(const FlowRecord& flow, const B4Evaluator& b4, int sign, int stride = 1,
                           bool dealias = true);

}  // namespace mkdv
