#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cpe/energy.hpp"
#include "cpe/errors.hpp"
#include "cpe/params.hpp"
#include "cpe/state.hpp"
#include "cpe/tendencies.hpp"

namespace cpe {

struct RunOptions {
  double T_final = 0.0;
  /// Upper bound on the step; 0 selects stable_dt of the initial state.
  double dt = 0.0;
  double c_cfl = 1.0;
  int record_every = 1;
  TendencyOptions faults;
  /// Full EnergyReport at record times; when false only t, min sigma,
  /// min p and mass are filled.
  bool monitor_energy = true;
  /// Called with (state, t, step) at step 0 and after every step.
  std::function<void(const State&, double, long)> observer;
};

/// Additional right-hand side, e.g. manufactured-solution forcing.
using Forcing = std::function<void(const State&, double, StateTendency&)>;

struct RunResult {
  State final_state;
  double t_final = 0.0;
  double dt = 0.0;
  long steps = 0;
  long steps_taken = 0;
  std::vector<EnergyReport> records;
  std::vector<std::string> warnings;
  std::optional<FaultKind> fault;
  std::string fault_message;

  bool ok() const noexcept { return !fault.has_value(); }
};

/// c_cfl / (mu max(sigma) k2max + (mu + lambda) max(sigma) kh2max
///          + nu max(sigma) (pi nz)^2 + eps kh2max + |v|_inf kmax + |w|_inf pi nz)
/// with kx max = nx/2, ky max = ny/2, kh2max = kx^2 + ky^2 and
/// k2max = kh2max + (pi nz)^2.
double stable_dt(const State& s, const PhysParams& params, double c_cfl = 1.0);

/// Number of equal steps and their size covering [0, T] with steps <= dt_max.
std::pair<long, double> uniform_steps(double T, double dt_max);

/// Explicit RK4 integration of the regularized system. Faults end the run
/// early; the result then holds the last good state and the records so far.
RunResult advance(const State& initial, const PhysParams& params, const RunOptions& opts,
                  const Forcing& forcing = {});

}  // namespace cpe
