#include "cpe/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "cpe/errors.hpp"
#include "cpe/manufactured.hpp"
#include "cpe/norms.hpp"
#include "cpe/operators.hpp"
#include "cpe/parallel.hpp"

namespace cpe {

namespace {

void require_ok(const RunResult& r, const char* what) {
  if (!r.ok()) throw Fault(*r.fault, std::string(what) + ": " + r.fault_message);
}

RunOptions quiet_options(double T, double dt) {
  RunOptions o;
  o.T_final = T;
  o.dt = dt;
  o.monitor_energy = false;
  o.record_every = 1;
  return o;
}

double max_mass_drift(const RunResult& r) {
  if (r.records.empty()) return 0.0;
  const double m0 = r.records.front().mass;
  double d = 0.0;
  for (const auto& rec : r.records) d = std::max(d, std::abs(rec.mass - m0) / m0);
  return d;
}

void fill_orders(std::vector<MmsRow>& rows, bool by_dt) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double h0 = by_dt ? rows[i - 1].dt : 1.0 / rows[i - 1].n;
    const double h1 = by_dt ? rows[i].dt : 1.0 / rows[i].n;
    if (rows[i].error > 0.0 && rows[i - 1].error > 0.0)
      rows[i].order = std::log(rows[i - 1].error / rows[i].error) / std::log(h0 / h1);
  }
}

double dissipation_integrand(const State& d) {
  double s = 0.0;
  for (int c = 0; c < 2; ++c) s += sobolev_norm_sq(laplacian(d.v[c]), 0);
  return s + sobolev_norm_sq(ddz(d.sigma), 0);
}

}  // namespace

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw UsageFault("fit_line: need two or more points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw UsageFault("fit_line: x values coincide");
  LineFit f;
  f.slope = (n * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

MmsTable mms_run(const MmsConfig& cfg) {
  const Forcing forcing = manufactured_forcing(cfg.case_id, cfg.params);
  struct Job {
    int n;
    double dt;
    bool temporal;
  };
  std::vector<Job> jobs;
  for (double dt : cfg.dts) jobs.push_back({cfg.temporal_n, dt, true});
  for (int n : cfg.resolutions) jobs.push_back({n, cfg.spatial_dt, false});

  auto solve = [&](int n, double dt) {
    const Grid grid(n, n, n);
    RunOptions o = quiet_options(cfg.T, dt);
    o.record_every = std::numeric_limits<int>::max();
    RunResult r = advance(manufactured_state(cfg.case_id, grid, 0.0), cfg.params, o, forcing);
    require_ok(r, "mms_run");
    return r;
  };
  std::optional<State> reference;
  if (cfg.temporal_reference_dt > 0.0)
    reference = solve(cfg.temporal_n, cfg.temporal_reference_dt).final_state;

  const auto rows = parallel_map<MmsRow>(jobs.size(), [&](std::size_t i) {
    const RunResult r = solve(jobs[i].n, jobs[i].dt);
    MmsRow row;
    row.n = jobs[i].n;
    row.dt = r.dt;
    row.steps = r.steps;
    if (jobs[i].temporal && reference) {
      row.error = max_abs_difference(r.final_state, *reference);
    } else {
      const Grid grid(row.n, row.n, row.n);
      row.error = max_abs_difference(r.final_state, manufactured_state(cfg.case_id, grid, r.t_final));
    }
    return row;
  });

  MmsTable t;
  t.case_id = cfg.case_id;
  for (std::size_t i = 0; i < jobs.size(); ++i) (jobs[i].temporal ? t.temporal : t.spatial).push_back(rows[i]);
  fill_orders(t.temporal, true);
  fill_orders(t.spatial, false);
  std::vector<double> lx, ly;
  for (const auto& r : t.temporal)
    if (r.error > 0.0) {
      lx.push_back(std::log(r.dt));
      ly.push_back(std::log(r.error));
    }
  if (lx.size() >= 2) t.temporal_order = fit_line(lx, ly).slope;
  return t;
}

EpsilonSweepResult epsilon_sweep(const State& initial, const EpsilonSweepConfig& cfg) {
  std::vector<double> eps{0.0};
  for (double e : cfg.eps) {
    if (!(e > 0.0)) throw UsageFault("epsilon_sweep: eps values must be positive");
    eps.push_back(e);
  }
  double dt = std::numeric_limits<double>::infinity();
  for (double e : eps) dt = std::min(dt, stable_dt(initial, cfg.params.with_epsilon(e), cfg.c_cfl));

  EpsilonSweepResult res;
  std::tie(res.steps, res.dt) = uniform_steps(cfg.T, dt);
  const auto runs = parallel_map<RunResult>(eps.size(), [&](std::size_t i) {
    RunResult r = advance(initial, cfg.params.with_epsilon(eps[i]), quiet_options(cfg.T, res.dt));
    require_ok(r, "epsilon_sweep");
    return r;
  });
  res.reference_mass_drift = max_mass_drift(runs[0]);
  for (std::size_t i = 1; i < eps.size(); ++i)
    res.rows.push_back({eps[i], difference_norm(runs[i].final_state, runs[0].final_state),
                        max_mass_drift(runs[i])});

  std::vector<EpsilonRow> sorted = res.rows;
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return a.eps > b.eps; });
  res.strictly_decreasing = true;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!(sorted[i].distance < sorted[i - 1].distance)) res.strictly_decreasing = false;
  std::vector<double> lx, ly;
  for (const auto& r : res.rows)
    if (r.distance > 0.0) {
      lx.push_back(std::log(r.eps));
      ly.push_back(std::log(r.distance));
    }
  if (lx.size() >= 2) res.slope = fit_line(lx, ly).slope;
  return res;
}

PerturbationResult continuous_dependence(const State& initial, const State& direction,
                                         const PerturbationConfig& cfg) {
  require_same_grid(initial.grid(), direction.grid(), "continuous_dependence");
  PerturbationResult res;
  std::tie(res.steps, res.dt) = uniform_steps(cfg.T, stable_dt(initial, cfg.params, cfg.c_cfl));

  std::vector<State> base;
  RunOptions ob = quiet_options(cfg.T, res.dt);
  ob.observer = [&](const State& s, double, long) { base.push_back(s); };
  const RunResult rb = advance(initial, cfg.params, ob);
  require_ok(rb, "continuous_dependence");

  res.rows = parallel_map<PerturbationRow>(cfg.deltas.size(), [&](std::size_t i) {
    PerturbationRow row;
    row.delta = cfg.deltas[i];
    State u0 = initial;
    State dir = direction;
    dir *= row.delta;
    u0 += dir;
    double prev = 0.0;
    RunOptions o = quiet_options(cfg.T, res.dt);
    o.observer = [&](const State& s, double, long n) {
      const double cur = dissipation_integrand(s - base[static_cast<std::size_t>(n)]);
      if (n > 0) row.dissipation += 0.5 * res.dt * (prev + cur);
      prev = cur;
    };
    const RunResult r = advance(u0, cfg.params, o);
    require_ok(r, "continuous_dependence");
    row.difference = difference_norm(r.final_state, rb.final_state);
    row.ratio = row.delta != 0.0 ? row.difference / row.delta : 0.0;
    return row;
  });

  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  std::vector<double> lx, ly;
  for (const auto& r : res.rows) {
    if (r.delta == 0.0) continue;
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
    if (r.dissipation > 0.0) {
      lx.push_back(std::log(std::abs(r.delta)));
      ly.push_back(std::log(r.dissipation));
    }
  }
  if (hi > 0.0) res.ratio_spread = hi / lo;
  if (lx.size() >= 2) res.dissipation_slope = fit_line(lx, ly).slope;
  return res;
}

std::vector<PicardScanRow> picard_horizon_scan(const State& initial, const PhysParams& params,
                                               double T0, int max_doublings, PicardOptions base) {
  if (!(T0 > 0.0) || max_doublings < 0) throw UsageFault("picard_horizon_scan: bad horizon");
  base.raise_on_no_contraction = false;
  if (base.stop_above_ratio == 0.0) base.stop_above_ratio = 0.5;
  std::vector<PicardScanRow> rows;
  for (int i = 0; i <= max_doublings; ++i) {
    PicardOptions o = base;
    o.T = T0 * std::ldexp(1.0, i);
    PicardScanRow row;
    row.T = o.T;
    row.report = picard_solve(initial, params, o).report;
    for (double r : row.report.ratios) row.max_ratio = std::max(row.max_ratio, r);
    rows.push_back(row);
    if (row.report.no_contraction || row.max_ratio > 0.5) break;
  }
  return rows;
}

}  // namespace cpe
