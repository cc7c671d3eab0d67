#pragma once

#include "cpe/params.hpp"
#include "cpe/state.hpp"

namespace cpe {

/// Monitored quantities of one time level.
struct EnergyReport {
  double t = 0.0;
  /// ||v||_{H3}^2 + ||sigma||_{H2}^2 + ||p||_{H3}^2
  double E = 0.0;
  /// Running time integrals of ||v||_{H4}^2 and ||dz sigma||_{H2}^2.
  double int_v_h4 = 0.0;
  double int_dzsigma_h2 = 0.0;
  double min_sigma = 0.0;
  double min_p = 0.0;
  double mass = 0.0;
  double max_w_wall = 0.0;
  double max_phi_average = 0.0;
};

/// Trapezoidal running sums of the dissipation integrands. Call observe() at
/// every time level, in order.
class DissipationSums {
 public:
  void observe(const State& s, double t);
  double int_v_h4() const noexcept { return v_h4_; }
  double int_dzsigma_h2() const noexcept { return dzs_h2_; }

  /// Instantaneous integrands (||v||_{H4}^2, ||dz sigma||_{H2}^2).
  static std::pair<double, double> integrands(const State& s);

 private:
  bool started_ = false;
  double t_prev_ = 0.0;
  double v_prev_ = 0.0;
  double s_prev_ = 0.0;
  double v_h4_ = 0.0;
  double dzs_h2_ = 0.0;
};

/// E = ||v||_{H3}^2 + ||sigma||_{H2}^2 + ||p||_{H3}^2
double energy(const State& s);

/// Assembles the report for `s` at time t from the given running sums.
EnergyReport energy_report(const State& s, const PhysParams& params, double t,
                           const DissipationSums& sums);

}  // namespace cpe
