#pragma once

#include <string>
#include <vector>

#include "cpe/params.hpp"
#include "cpe/state.hpp"

namespace cpe {

struct PicardOptions {
  double T = 0.0;
  double tol = 1e-9;
  int max_iter = 30;
  /// Upper bound on the step; 0 selects stable_dt of the initial data.
  double dt = 0.0;
  double c_cfl = 1.0;
  /// Consecutive ratios >= 1 that count as failure to contract.
  int no_contraction_window = 3;
  /// Stop as soon as a contraction ratio exceeds this value (0 disables).
  double stop_above_ratio = 0.0;
  /// Throw NoContraction (after filling the report) instead of returning.
  bool raise_on_no_contraction = true;
};

struct PicardReport {
  /// d_k = trajectory-norm distance between iterates k and k+1.
  std::vector<double> deltas;
  /// d_{k+1} / d_k for every consecutive pair.
  std::vector<double> ratios;
  bool converged = false;
  bool no_contraction = false;
  int iterations = 0;
};

struct PicardResult {
  /// Iterate at the step points t_n = n dt, n = 0..steps.
  std::vector<State> trajectory;
  PicardReport report;
  double dt = 0.0;
  long steps = 0;
};

/// Fixed-point iteration of the solution map: freeze the stage trajectory
/// of the current iterate, evaluate the sources N1, N2, N3 and the
/// coefficients along it, and solve the linear problems
///   dV/dt = mu sigma lap V + (mu + lambda) sigma grad_h div_h V + N1
///   dS/dt = nu sigma dzz S + eps lap_h S + N2
///   dP/dt = eps lap_h P + N3
/// from the initial data with the same RK4 stages as advance(). V and S are
/// solved on the evenly extended torus. The first iterate is the initial
/// data held constant.
PicardResult picard_solve(const State& initial, const PhysParams& params,
                          const PicardOptions& opts);

/// max over step points of the H3 state norm of a - b.
double trajectory_distance(const std::vector<State>& a, const std::vector<State>& b);

}  // namespace cpe
