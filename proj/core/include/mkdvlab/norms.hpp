#pragma once

#include <limits>

#include "mkdvlab/grid.hpp"
#include "mkdvlab/littlewood_paley.hpp"
#include "mkdvlab/symbol.hpp"

namespace mkdv {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

double l2_norm(const RealField& f);
double l2_norm(const SpectralField& f);
/// (dx sum |u_j|^p)^{1/p}; p = kInf gives the grid maximum.
double lp_norm(const RealField& f, double p);

/// ||(xi^2 + M)^{s/2} hat u||_{L^2} with the project normalization.
double sobolev_norm(const SpectralField& f, double s, double M);
/// sqrt((1/L) sum a(xi_k) |hat u_k|^2).
double symbol_norm(const SpectralField& f, const SymbolA& a);

/// Sum over dyadic blocks N >= M of ||P_N u||^2_{H^s_M} (P_M meaning P_{<=M}).
double block_l2_sobolev_sq(const SpectralField& f, const LPPartition& part, double s);

struct BernsteinResult {
  double ratio = 0.0;                ///< ||P_N f||_{L^q} / ||f||_{L^p}
  double standard_exponent = 0.0;    ///< 1/p - 1/q
  double printed_exponent = 0.0;     ///< 1/q - 1/p, the opposite-sign candidate
  double leakage = 0.0;              ///< relative L^2 mass of f outside N/2 <= |xi| <= 2N
  bool localized = true;             ///< leakage <= 1e-8
};

/// Empirical Bernstein ratio; both candidate exponents are reported so sweeps
/// can decide which one the data follows.
BernsteinResult bernstein_ratio(const RealField& f, const LPPartition& part, double N, double p, double q);

}  // namespace mkdv
