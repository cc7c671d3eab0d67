#pragma once

#include <string>
#include <vector>

#include "cpe/integrators.hpp"
#include "cpe/picard.hpp"

namespace cpe {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least-squares line through (x, y). Needs at least two distinct x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct MmsConfig {
  std::string case_id = "A-osc";
  PhysParams params;
  double T = 0.01;
  /// Temporal study: these step sizes on a grid of temporal_n^3.
  std::vector<double> dts{4e-4, 2e-4, 1e-4};
  int temporal_n = 16;
  /// When positive, temporal errors are measured against a run on the same
  /// grid with this step instead of the exact solution.
  double temporal_reference_dt = 0.0;
  /// Spatial study: these n^3 grids at step spatial_dt.
  std::vector<int> resolutions{16, 24, 32};
  double spatial_dt = 1e-4;
};

struct MmsRow {
  int n = 0;
  double dt = 0.0;
  long steps = 0;
  /// Max nodal error over all components at T.
  double error = 0.0;
  /// log(e_prev / e) / log(h_prev / h) against the previous row; 0 on the first.
  double order = 0.0;
};

struct MmsTable {
  std::string case_id;
  std::vector<MmsRow> temporal;
  std::vector<MmsRow> spatial;
  /// Slope of log error against log dt over the temporal rows.
  double temporal_order = 0.0;
};

/// Integrates the manufactured case with its exact forcing and reports
/// errors and observed orders. Unknown case ids throw UsageFault.
MmsTable mms_run(const MmsConfig& cfg);

struct EpsilonSweepConfig {
  PhysParams params;
  double T = 0.05;
  std::vector<double> eps{1e-2, 1e-3, 1e-4};
  double c_cfl = 1.0;
};

struct EpsilonRow {
  double eps = 0.0;
  /// Difference norm to the eps = 0 run at T.
  double distance = 0.0;
  /// max_t |M(t) - M(0)| / M(0)
  double mass_drift = 0.0;
};

struct EpsilonSweepResult {
  std::vector<EpsilonRow> rows;
  double reference_mass_drift = 0.0;
  /// Slope of log distance against log eps.
  double slope = 0.0;
  bool strictly_decreasing = false;
  double dt = 0.0;
  long steps = 0;
};

/// Runs the eps = 0 reference and every listed eps with one common step
/// (the smallest stable_dt over all members).
EpsilonSweepResult epsilon_sweep(const State& initial, const EpsilonSweepConfig& cfg);

struct PerturbationConfig {
  PhysParams params;
  double T = 0.05;
  std::vector<double> deltas{1e-3, 1e-4, 1e-5};
  double c_cfl = 1.0;
};

struct PerturbationRow {
  double delta = 0.0;
  /// (||v_d||_{H1}^2 + ||sigma_d||_2^2 + ||p_d||_{H1}^2)^(1/2) at T.
  double difference = 0.0;
  /// difference / delta (0 when delta = 0).
  double ratio = 0.0;
  /// int_0^T (||lap v_d||_2^2 + ||dz sigma_d||_2^2) dt, trapezoidal.
  double dissipation = 0.0;
};

struct PerturbationResult {
  std::vector<PerturbationRow> rows;
  /// max ratio / min ratio over rows with delta > 0.
  double ratio_spread = 0.0;
  /// Slope of log dissipation against log delta.
  double dissipation_slope = 0.0;
  double dt = 0.0;
  long steps = 0;
};

/// Compares the run from `initial` with runs from initial + delta * direction.
PerturbationResult continuous_dependence(const State& initial, const State& direction,
                                         const PerturbationConfig& cfg);

struct PicardScanRow {
  double T = 0.0;
  PicardReport report;
  double max_ratio = 0.0;
};

/// Picard solves at T0, 2 T0, 4 T0, ... (at most max_doublings + 1 horizons),
/// stopping at the first horizon with NoContraction or a ratio above 0.5.
std::vector<PicardScanRow> picard_horizon_scan(const State& initial, const PhysParams& params,
                                               double T0, int max_doublings,
                                               PicardOptions base = {});

}  // namespace cpe
