#include "cpe/picard.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cpe/errors.hpp"
#include "cpe/integrators.hpp"
#include "cpe/norms.hpp"
#include "cpe/operators.hpp"
#include "cpe/parabolic.hpp"
#include "cpe/rk4.hpp"
#include "cpe/spectral.hpp"
#include "cpe/tendencies.hpp"

namespace cpe {

namespace {

struct TorusState {
  TorusVector V;
  ExtendedField S;
  ScalarField2D P;
};

struct TorusRate {
  TorusVector V;
  ExtendedField S;
  ScalarField2D P;
};

void torus_axpy(TorusState& y, double a, const TorusRate& k) {
  y.V[0].axpy(a, k.V[0]);
  y.V[1].axpy(a, k.V[1]);
  y.S.axpy(a, k.S);
  y.P.axpy(a, k.P);
}

ExtendedField extend(const ScalarField3D& f) { return even_extend(f, NeumannCheck::Skip); }

TorusState to_torus(const State& s) {
  return TorusState{{extend(s.v[0]), extend(s.v[1])}, extend(s.sigma), s.p};
}

State to_channel(const TorusState& y, const Grid& g) {
  return State(VectorField3D2C(restrict_to_channel(y.V[0], g), restrict_to_channel(y.V[1], g)),
               restrict_to_channel(y.S, g), y.P);
}

// Frozen data of one stage: linear operators built from sigma and the sources.
struct StageData {
  ParabolicOperator vop;
  ParabolicOperator sop;
  TorusVector n1;
  ExtendedField n2;
  ScalarField2D n3;
};

StageData freeze(const State& y, const PhysParams& params) {
  const TorusGrid tg = TorusGrid::extension_of(y.grid());
  ExtendedField sig = extend(y.sigma);
  ParabolicCoefficients vc;
  vc.a = sig;
  *vc.a *= params.mu();
  vc.b = sig;
  *vc.b *= params.mu() + params.lambda();
  ParabolicCoefficients sc;
  sc.c = sig;
  *sc.c *= params.nu();
  sc.e = params.epsilon();
  Sources src = source_terms(y, params);
  return StageData{ParabolicOperator(vc, tg), ParabolicOperator(sc, tg),
                   {extend(src.n1[0]), extend(src.n1[1])}, extend(src.n2), std::move(src.n3)};
}

}  // namespace

double trajectory_distance(const std::vector<State>& a, const std::vector<State>& b) {
  if (a.size() != b.size()) throw UsageFault("trajectory_distance: length mismatch");
  double d = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) d = std::max(d, state_h3_norm(a[n] - b[n]));
  return d;
}

PicardResult picard_solve(const State& initial, const PhysParams& params,
                          const PicardOptions& opts) {
  if (!(opts.T > 0.0)) throw UsageFault("picard_solve: T must be positive");
  if (opts.max_iter < 1) throw UsageFault("picard_solve: max_iter must be at least 1");
  const Grid& g = initial.grid();
  PicardResult res;
  const double dt_max = opts.dt > 0.0 ? opts.dt : stable_dt(initial, params, opts.c_cfl);
  std::tie(res.steps, res.dt) = uniform_steps(opts.T, dt_max);
  const long N = res.steps;
  const double dt = res.dt;

  // stages[n][s]: stage states of the current iterate.
  std::vector<std::vector<State>> stages(N, std::vector<State>(4, initial));
  std::vector<State> traj(N + 1, initial);
  int bad_run = 0;

  for (int it = 0; it < opts.max_iter; ++it) {
    std::vector<std::vector<State>> next_stages(N);
    std::vector<State> next_traj;
    next_traj.reserve(N + 1);
    next_traj.push_back(initial);
    TorusState y = to_torus(initial);
    for (long n = 0; n < N; ++n) {
      std::vector<StageData> frozen;
      frozen.reserve(4);
      for (int s = 0; s < 4; ++s) frozen.push_back(freeze(stages[n][s], params));
      auto rhs = [&](const TorusState& z, double, int s) {
        next_stages[n].push_back(to_channel(z, g));
        const StageData& fd = frozen[s];
        TorusRate k{fd.vop.apply(z.V), fd.sop.apply({z.S}).front(), fd.n3};
        k.V[0] += fd.n1[0];
        k.V[1] += fd.n1[1];
        k.S += fd.n2;
        if (params.epsilon() != 0.0) k.P.axpy(params.epsilon(), laplacian_h(z.P));
        return k;
      };
      y = rk4_step(y, n * dt, dt, rhs, torus_axpy);
      next_traj.push_back(to_channel(y, g));
      next_traj.back().require_finite("picard iterate");
    }

    const double d = trajectory_distance(next_traj, traj);
    if (!res.report.deltas.empty()) {
      const double prev = res.report.deltas.back();
      res.report.ratios.push_back(prev > 0.0 ? d / prev : (d > 0.0 ? INFINITY : 0.0));
    }
    res.report.deltas.push_back(d);
    res.report.iterations = it + 1;
    stages = std::move(next_stages);
    traj = std::move(next_traj);

    if (opts.stop_above_ratio > 0.0 && !res.report.ratios.empty() &&
        res.report.ratios.back() > opts.stop_above_ratio)
      break;
    if (d <= opts.tol) {
      res.report.converged = true;
      break;
    }
    if (!res.report.ratios.empty() && res.report.ratios.back() >= 1.0) {
      if (++bad_run >= opts.no_contraction_window) {
        res.report.no_contraction = true;
        break;
      }
    } else {
      bad_run = 0;
    }
  }
  res.trajectory = std::move(traj);
  if (res.report.no_contraction && opts.raise_on_no_contraction) {
    std::ostringstream os;
    os << "Picard map did not contract over T = " << opts.T << "; ratios";
    for (double r : res.report.ratios) os << ' ' << r;
    throw NoContraction(os.str());
  }
  return res;
}

}  // namespace cpe
