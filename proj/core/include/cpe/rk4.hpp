#pragma once

namespace cpe {

/// One classical RK4 step. `rhs(y, t, stage)` returns the derivative at a
/// stage state; `axpy(y, a, k)` performs y += a k. Stages are numbered 0..3
/// at times t, t + dt/2, t + dt/2, t + dt.
template <class Y, class Rhs, class Axpy>
Y rk4_step(const Y& y, double t, double dt, Rhs&& rhs, Axpy&& axpy) {
  const auto k1 = rhs(y, t, 0);
  Y y2 = y;
  axpy(y2, 0.5 * dt, k1);
  const auto k2 = rhs(y2, t + 0.5 * dt, 1);
  Y y3 = y;
  axpy(y3, 0.5 * dt, k2);
  const auto k3 = rhs(y3, t + 0.5 * dt, 2);
  Y y4 = y;
  axpy(y4, dt, k3);
  const auto k4 = rhs(y4, t + dt, 3);
  Y out = y;
  axpy(out, dt / 6.0, k1);
  axpy(out, dt / 3.0, k2);
  axpy(out, dt / 3.0, k3);
  axpy(out, dt / 6.0, k4);
  return out;
}

}  // namespace cpe
