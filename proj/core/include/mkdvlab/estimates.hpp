#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mkdvlab/grid.hpp"
#include "mkdvlab/norms.hpp"
#include "mkdvlab/solver.hpp"

namespace mkdv {

/// 2/p + 1/q = 1/2 with 4 <= p <= inf and 2 <= q <= inf (tolerance 1e-12).
bool admissible(double p, double q) noexcept;
/// Throws DomainError naming the pair when it is not admissible.
void require_admissible(double p, double q);

struct ExponentPair {
  double p;
  double q;
};

struct SweepRecord {
  std::string estimate;    ///< "strichartz", "smoothing" or "bilinear"
  double p = 0.0;          ///< outer exponent (2 for bilinear)
  double q = 0.0;          ///< inner exponent (2 for bilinear)
  double scale1 = 0.0;     ///< N, or M1 for bilinear
  double scale2 = 0.0;     ///< M2 for bilinear, 0 otherwise
  int trial = 0;
  std::uint64_t seed = 0;  ///< seed of this trial's random stream
  double raw_ratio = 0.0;
  double normalized_ratio = 0.0;
};

/// Per-scale maxima over trials and their spread across scales.
struct SweepSummary {
  std::string estimate;
  double p = 0.0;
  double q = 0.0;
  double fixed_scale = 0.0;              ///< bilinear: M1 of a fixed-M1 row, 0 for the M1 = M2 diagonal
  std::vector<std::pair<double, double>> scale_max;  ///< (scale, max normalized ratio)
  double max = 0.0;
  double median = 0.0;
  double spread = 0.0;                   ///< max / median
  bool bounded = false;                  ///< spread <= 4
};

/// Geometry shared by the linear sweeps at one block N.
struct LinearSweepSetup {
  GridSpec grid;
  double horizon;
  double envelope_width;
  double envelope_center;
  int time_samples_time_outer;
  int time_samples_space_outer;
};

/// Box L = 32 pi, n the smallest power of two with xi_max >= 3N, horizon
/// min(1, L / (12 (2N)^2)) so the wraparound validator passes at block N.
LinearSweepSetup linear_sweep_setup(double N);

struct SweepOptions {
  std::vector<ExponentPair> pairs{{kInf, 2.0}, {6.0, 6.0}, {4.0, kInf}};
  std::vector<double> scales{4, 8, 16, 32, 64, 128};
  int trials = 20;
  std::uint64_t seed = 1;
};

struct LinearRatios {
  double raw = 0.0;
  double normalized = 0.0;
};

/// Ratios of one block-N datum for one exponent pair over [0, horizon].
LinearRatios strichartz_ratios(const SpectralField& phi, double N, ExponentPair pq, double horizon, int samples);
/// Space-outer ratios for several pairs from one pass over the time samples.
std::vector<LinearRatios> smoothing_ratios(const SpectralField& phi, double N, const std::vector<ExponentPair>& pairs,
                                           double horizon, int samples);
/// Returns (raw, (M1 M2)^{1/2} raw) with raw = ||e phi e psi||_{L^2_{t,x}} / (||phi|| ||psi||).
LinearRatios bilinear_ratios(const SpectralField& phi, const SpectralField& psi, double M1, double M2, double horizon,
                             int samples);

/// Random unit-L^2 datum for block N of linear_sweep_setup(N).
SpectralField linear_sweep_data(const LinearSweepSetup& setup, double N, std::uint64_t seed);

/// Strichartz: raw ||D^{1/p} e^{-t d^3} phi||_{L^p_t L^q_x} / ||phi||, normalized
/// N^{1/p} ||P_N e^{-t d^3} phi||_{L^p_t L^q_x} / ||phi|| over [0, horizon].
std::vector<SweepRecord> strichartz_sweep(const SweepOptions& options);

/// Local smoothing / maximal function: space-outer norms with exponent 1 - 5/p.
std::vector<SweepRecord> smoothing_maximal_sweep(const SweepOptions& options);

struct BilinearOptions {
  /// (M1, M2) points to sample.
  std::vector<std::pair<double, double>> points;
  int trials = 20;
  std::uint64_t seed = 1;
  int time_samples = 257;
};

/// Frequency geometry of one bilinear sweep point.
struct BilinearGeometry {
  double M1, M2;
  double center1, center2;  ///< band centers (M1 + M2)/2 and (M1 - M2)/2
  double half_width;        ///< min(M1, M2) / 8
  double envelope_width;    ///< 4 / half_width
  double horizon;           ///< 8 w / (3 M1 M2)
  GridSpec grid;
};

/// Throws DomainError naming the violated constraint when the bands cannot
/// satisfy |xi_1 + xi_2| ~ M1 and |xi_1 - xi_2| ~ M2.
BilinearGeometry bilinear_geometry(double M1, double M2);

/// Unit-L^2 data (phi, psi) on the two bands of a bilinear geometry.
std::pair<SpectralField, SpectralField> bilinear_data(const BilinearGeometry& geo, std::uint64_t seed);

/// Records (M1 M2)^{1/2} ||e^{-t d^3} phi e^{-t d^3} psi||_{L^2_{t,x}} / (||phi|| ||psi||).
std::vector<SweepRecord> bilinear_sweep(const BilinearOptions& options);

/// Groups records by (estimate, p, q), and bilinear records by fixed M1 or the
/// M1 = M2 diagonal with M2 as the scale axis, then applies the max/median test.
std::vector<SweepSummary> summarize(const std::vector<SweepRecord>& records);

/// Deviation curve t -> ||u(t) - e^{-t d^3} phi||_{H^s} of the linear-window experiment.
struct WindowCurve {
  double N = 0.0;
  double s = 0.0;
  std::vector<double> times;
  std::vector<double> theta;      ///< t N^{1 - 4s}
  std::vector<double> deviation;
  double deviation_at_theta1 = 0.0;
  bool blow_up = false;
  WraparoundCheck wraparound;
};

struct WindowOptions {
  double s = 0.0;
  double theta_max = 1.25;
  int records_per_unit_theta = 16;
  int steps_per_record = 8;
  int sign = 1;
  double nonlinearity = 1.0;
  double length = 256.0 * 3.14159265358979323846;
  double top_scale = 32.0;              ///< largest N the shared grid must resolve
  double band_half_width = 1.0;
  double envelope_width = 2.0;
  std::uint64_t seed = 1;
};

/// Shared grid for a set of window runs: n is a power of two whose 2/3 band
/// holds three times the top packet frequency.
GridSpec window_grid(const WindowOptions& options);

/// Window data at block N: Gaussian coefficients on N - b <= |xi| <= N + b,
/// drawn by offset from N so every N shares one random profile per seed,
/// localized by an envelope at the box center, normalized to ||phi||_{H^s_1} = 1.
SpectralField window_data(const GridSpec& grid, double N, const WindowOptions& options);

/// Nonlinear solve against free propagation on [0, theta_max N^{4s-1}].
WindowCurve linear_window_experiment(double N, const WindowOptions& options);

struct AprioriRow {
  int trial = 0;
  std::uint64_t seed = 0;
  double initial_norm = 0.0;
  double max_ratio = 0.0;       ///< sup_t ||u(t)||_{H^s} / ||u0||_{H^s}
  bool blow_up = false;
  double last_time = 0.0;
};

struct AprioriTable {
  double s = 0.0;
  double M = 1.0;
  double R = 1.0;
  double T = 1.0;
  double reference = 1.0;       ///< max{1, R^{-8s/(1+8s)} T^{-s/(1+8s)}}
  double max_ratio = 0.0;
  bool below_reference = false;
  std::vector<AprioriRow> rows;
};

struct AprioriOptions {
  double s = -1.0 / 16.0;
  double M = 1.0;
  double R = 1.0;
  int trials = 20;
  std::uint64_t seed = 1;
  SolverConfig solver{GridSpec(64.0 * 3.14159265358979323846, 256), 1e-3, 1.0, 1, true, 10, 1.0};
};

/// Reference growth factor for -1/8 < s < 0.
double apriori_reference(double s, double R, double T);

AprioriTable apriori_growth_experiment(const AprioriOptions& options);

}  // namespace mkdv
