#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpe/grid.hpp"
#include "cpe/inequality_lab.hpp"
#include "cpe/initial_conditions.hpp"
#include "cpe/integrators.hpp"
#include "cpe/params.hpp"

namespace cpe {

struct ExperimentConfig {
  std::vector<double> eps{1e-2, 1e-3, 1e-4};
  std::vector<double> deltas{1e-3, 1e-4, 1e-5};
  int perturb_band = 3;
  std::string mms_case = "A-osc";
  double mms_T = 0.01;
  std::vector<double> mms_dts{4e-4, 2e-4, 1e-4};
  int mms_temporal_n = 16;
  std::vector<int> mms_resolutions{16, 24, 32};
  double mms_spatial_dt = 1e-4;
  double picard_tol = 1e-9;
  int picard_max_iter = 30;
};

/// Everything a CLI subcommand needs. Sections of the INI file:
///   seed = N                  (top level)
///   [grid]       nx ny nz
///   [physics]    gamma mu lambda kappa R epsilon sigma_floor p_floor tol_bc
///   [initial]    family sigma0 p0 amplitude band snapshot
///   [run]        T dt c_cfl record_every monitor_energy
///   [experiment] eps deltas perturb_band mms_case mms_T mms_dts mms_temporal_n
///                mms_resolutions mms_spatial_dt picard_tol picard_max_iter
///   [ineq]       kind m q r1 s1 r2 s2 trials band_limit constant_f bins
/// Lists are comma separated; dt = auto selects stable_dt.
struct RunConfig {
  int nx = 16, ny = 16, nz = 16;
  PhysParams params;
  double tol_bc = 1e-11;
  InitialSpec initial;
  RunOptions run;
  ExperimentConfig experiment;
  InequalityConfig ineq;
  std::uint64_t seed = 1;

  Grid grid() const { return Grid(nx, ny, nz); }
};

/// Replaces the seed everywhere it is used.
void apply_seed(RunConfig& cfg, std::uint64_t seed);

/// Throws ParseFault(key) for malformed or unknown entries and
/// ConstraintFault(key) for values outside their admissible range.
RunConfig parse_config(const std::string& text);
/// As parse_config; IoFault if the file cannot be read.
RunConfig load_config(const std::string& path);

}  // namespace cpe
