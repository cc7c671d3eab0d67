#include "cpe/integrators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpe/diagnostics.hpp"
#include "cpe/rk4.hpp"

namespace cpe {

double stable_dt(const State& s, const PhysParams& params, double c_cfl) {
  check_positivity(s, params, {}, nullptr);
  const Grid& g = s.grid();
  const double kx = g.nx() / 2, ky = g.ny() / 2;
  const double kzmax = std::numbers::pi * g.nz();
  const double kh2 = kx * kx + ky * ky;
  const double k2 = kh2 + kzmax * kzmax;
  const double smax = s.sigma.max();
  const double wmax = vertical_velocity(s.sigma, s.v, s.p, params).max_abs();
  const double rate = params.mu() * smax * k2 + (params.mu() + params.lambda()) * smax * kh2 +
                      params.nu() * smax * kzmax * kzmax + params.epsilon() * kh2 +
                      s.v.max_abs() * std::sqrt(k2) + wmax * kzmax;
  return c_cfl / rate;
}

std::pair<long, double> uniform_steps(double T, double dt_max) {
  if (!(T > 0.0) || !(dt_max > 0.0)) throw UsageFault("uniform_steps: T and dt must be positive");
  const long n = std::max(1L, static_cast<long>(std::ceil(T / dt_max * (1.0 - 1e-12))));
  return {n, T / n};
}

namespace {

EnergyReport light_report(const State& s, double t) {
  EnergyReport r;
  r.t = t;
  r.min_sigma = s.sigma.min();
  r.min_p = s.p.min();
  r.mass = total_mass(s.sigma);
  return r;
}

}  // namespace

RunResult advance(const State& initial, const PhysParams& params, const RunOptions& opts,
                  const Forcing& forcing) {
  if (!(opts.T_final > 0.0)) throw UsageFault("advance: T_final must be positive");
  if (opts.dt < 0.0) throw UsageFault("advance: dt must be positive");
  if (opts.record_every < 1) throw UsageFault("advance: record_every must be at least 1");

  RunResult res{initial, 0.0, 0.0, 0, 0, {}, {}, {}, {}};
  const double dt_max = opts.dt > 0.0 ? opts.dt : stable_dt(initial, params, opts.c_cfl);
  std::tie(res.steps, res.dt) = uniform_steps(opts.T_final, dt_max);
  const double dt = res.dt;

  DissipationSums sums;
  auto record = [&](const State& s, double t) {
    if (opts.monitor_energy) {
      res.records.push_back(energy_report(s, params, t, sums));
    } else {
      res.records.push_back(light_report(s, t));
    }
  };

  std::vector<std::string> stage_warnings;
  auto rhs = [&](const State& y, double t, int) {
    stage_warnings.clear();
    StateTendency k = regularized_tendency(y, params, opts.faults, &stage_warnings);
    for (auto& w : stage_warnings)
      if (std::find(res.warnings.begin(), res.warnings.end(), w) == res.warnings.end())
        res.warnings.push_back(w);
    if (forcing) forcing(y, t, k);
    return k;
  };
  auto step_axpy = [](State& y, double a, const StateTendency& k) { axpy(y, a, k); };

  State state = initial;
  try {
    check_positivity(state, params, opts.faults, &stage_warnings);
    res.warnings = stage_warnings;
    if (opts.monitor_energy) sums.observe(state, 0.0);
    record(state, 0.0);
    if (opts.observer) opts.observer(state, 0.0, 0);
    for (long n = 0; n < res.steps; ++n) {
      const double t = n * dt;
      State next = rk4_step(state, t, dt, rhs, step_axpy);
      next.require_finite("advance");
      state = std::move(next);
      res.steps_taken = n + 1;
      res.t_final = (n + 1) * dt;
      if (opts.monitor_energy) sums.observe(state, res.t_final);
      if ((n + 1) % opts.record_every == 0 || n + 1 == res.steps) record(state, res.t_final);
      if (opts.observer) opts.observer(state, res.t_final, n + 1);
    }
  } catch (const Fault& f) {
    res.fault = f.kind();
    res.fault_message = f.what();
  }
  res.final_state = std::move(state);
  return res;
}

}  // namespace cpe
