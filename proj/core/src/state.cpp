#include "cpe/state.hpp"

#include <algorithm>
#include <string>

namespace cpe {

State::State(const Grid& grid) : v(grid), sigma(grid), p(grid) {}

State::State(VectorField3D2C v_, ScalarField3D sigma_, ScalarField2D p_)
    : v(std::move(v_)), sigma(std::move(sigma_)), p(std::move(p_)) {
  require_same_grid(v.grid(), sigma.grid(), "State");
  require_same_grid(p.grid(), sigma.grid(), "State");
}

State State::constant(const Grid& grid, double sigma0, double p0) {
  return State(VectorField3D2C(grid), ScalarField3D::constant(grid, sigma0),
               ScalarField2D::constant(grid, p0));
}

void State::require_finite(std::string_view what) const {
  v.require_finite(std::string(what) + " v");
  sigma.require_finite(std::string(what) + " sigma");
  p.require_finite(std::string(what) + " p");
}

StateTendency::StateTendency(const Grid& grid) : dv(grid), dsigma(grid), dp(grid) {}

StateTendency::StateTendency(VectorField3D2C dv_, ScalarField3D dsigma_, ScalarField2D dp_)
    : dv(std::move(dv_)), dsigma(std::move(dsigma_)), dp(std::move(dp_)) {}

double StateTendency::max_abs() const {
  return std::max({dv.max_abs(), dsigma.max_abs(), dp.max_abs()});
}

StateTendency& StateTendency::operator+=(const StateTendency& o) {
  dv += o.dv;
  dsigma += o.dsigma;
  dp += o.dp;
  return *this;
}

StateTendency& StateTendency::operator-=(const StateTendency& o) {
  dv -= o.dv;
  dsigma -= o.dsigma;
  dp -= o.dp;
  return *this;
}

StateTendency& StateTendency::operator*=(double s) {
  dv *= s;
  dsigma *= s;
  dp *= s;
  return *this;
}

StateTendency& StateTendency::axpy(double a, const StateTendency& o) {
  dv.axpy(a, o.dv);
  dsigma.axpy(a, o.dsigma);
  dp.axpy(a, o.dp);
  return *this;
}

State& axpy(State& state, double a, const StateTendency& t) {
  state.v.axpy(a, t.dv);
  state.sigma.axpy(a, t.dsigma);
  state.p.axpy(a, t.dp);
  return state;
}

State& operator-=(State& a, const State& b) {
  a.v -= b.v;
  a.sigma -= b.sigma;
  a.p -= b.p;
  return a;
}

State& operator+=(State& a, const State& b) {
  a.v += b.v;
  a.sigma += b.sigma;
  a.p += b.p;
  return a;
}

State& operator*=(State& a, double s) {
  a.v *= s;
  a.sigma *= s;
  a.p *= s;
  return a;
}

State operator-(State a, const State& b) { return a -= b; }

double max_abs_difference(const State& a, const State& b) {
  return std::max({(a.v[0] - b.v[0]).max_abs(), (a.v[1] - b.v[1]).max_abs(),
                   (a.sigma - b.sigma).max_abs(), (a.p - b.p).max_abs()});
}

}  // namespace cpe
