#pragma once

#include <string_view>

#include "cpe/field.hpp"

namespace cpe {

/// Unknowns of the channel model: horizontal velocity, specific volume and
/// the z-independent pressure.
struct State {
  VectorField3D2C v;
  ScalarField3D sigma;
  ScalarField2D p;

  explicit State(const Grid& grid);
  State(VectorField3D2C v, ScalarField3D sigma, ScalarField2D p);

  /// v = 0, sigma = sigma0, p = p0.
  static State constant(const Grid& grid, double sigma0, double p0);

  const Grid& grid() const noexcept { return sigma.grid(); }
  void require_finite(std::string_view what) const;
};

/// Time derivatives of the three unknowns.
struct StateTendency {
  VectorField3D2C dv;
  ScalarField3D dsigma;
  ScalarField2D dp;

  explicit StateTendency(const Grid& grid);
  StateTendency(VectorField3D2C dv, ScalarField3D dsigma, ScalarField2D dp);

  const Grid& grid() const noexcept { return dsigma.grid(); }
  /// Largest absolute entry over all components.
  double max_abs() const;

  StateTendency& operator+=(const StateTendency& o);
  StateTendency& operator-=(const StateTendency& o);
  StateTendency& operator*=(double s);
  StateTendency& axpy(double a, const StateTendency& o);
};

/// state += a * tendency
State& axpy(State& state, double a, const StateTendency& tendency);
State& operator-=(State& a, const State& b);
State& operator+=(State& a, const State& b);
State& operator*=(State& a, double s);
State operator-(State a, const State& b);

/// Largest absolute nodal difference over all components.
double max_abs_difference(const State& a, const State& b);

}  // namespace cpe
