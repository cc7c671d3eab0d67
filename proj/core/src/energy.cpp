#include "cpe/energy.hpp"

#include <utility>

#include "cpe/diagnostics.hpp"
#include "cpe/norms.hpp"
#include "cpe/operators.hpp"

namespace cpe {

std::pair<double, double> DissipationSums::integrands(const State& s) {
  return {sobolev_norm_sq(s.v, 4), sobolev_norm_sq(ddz(s.sigma), 2)};
}

void DissipationSums::observe(const State& s, double t) {
  const auto [v, z] = integrands(s);
  if (started_) {
    const double h = t - t_prev_;
    v_h4_ += 0.5 * h * (v + v_prev_);
    dzs_h2_ += 0.5 * h * (z + s_prev_);
  }
  started_ = true;
  t_prev_ = t;
  v_prev_ = v;
  s_prev_ = z;
}

double energy(const State& s) {
  return sobolev_norm_sq(s.v, 3) + sobolev_norm_sq(s.sigma, 2) + sobolev_norm_sq(s.p, 3);
}

EnergyReport energy_report(const State& s, const PhysParams& params, double t,
                           const DissipationSums& sums) {
  EnergyReport r;
  r.t = t;
  r.E = energy(s);
  r.int_v_h4 = sums.int_v_h4();
  r.int_dzsigma_h2 = sums.int_dzsigma_h2();
  r.min_sigma = s.sigma.min();
  r.min_p = s.p.min();
  r.mass = total_mass(s.sigma);
  r.max_w_wall = vertical_velocity(s.sigma, s.v, s.p, params).max_abs_at_walls();
  r.max_phi_average = vertical_average(phi(s.v, s.p, params)).max_abs();
  return r;
}

}  // namespace cpe
