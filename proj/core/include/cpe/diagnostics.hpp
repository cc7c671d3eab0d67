#pragma once

#include <array>
#include <string>
#include <vector>

#include "cpe/field.hpp"
#include "cpe/params.hpp"
#include "cpe/state.hpp"

namespace cpe {

/// Viscous heating Q and the horizontal stress tensor S_h = mu (grad v +
/// grad v^T) + lambda div v I, stored as (xx, xy, yy).
struct HeatingFields {
  ScalarField3D Q;
  std::array<ScalarField3D, 3> Sh;
};

struct ThermoFields {
  ScalarField3D rho;
  ScalarField3D theta;
};

/// Derived fields of a state plus any warnings raised while computing them.
struct DiagnosticFields {
  ScalarField3D w;
  ScalarField3D phi;
  ScalarField3D Q;
  std::array<ScalarField3D, 3> Sh;
  ScalarField3D rho;
  ScalarField3D theta;
  std::vector<std::string> warnings;
};

HeatingFields heating(const VectorField3D2C& v, const PhysParams& params);

/// div v~ + (v~ . grad p - (gamma-1) Q~) / (gamma p), where ~ is the
/// fluctuation about the vertical average. Throws PressurePositivityLost if
/// min p <= 0.
ScalarField3D phi(const VectorField3D2C& v, const ScalarField2D& p, const PhysParams& params);

/// w = nu dz sigma - integral_0^z phi. w(z=0) is exactly zero.
ScalarField3D vertical_velocity(const ScalarField3D& sigma, const VectorField3D2C& v,
                                const ScalarField2D& p, const PhysParams& params);

/// rho = 1/sigma and theta = sigma p / R.
ThermoFields reconstruct_thermo(const ScalarField3D& sigma, const ScalarField2D& p,
                                const PhysParams& params);

/// Integral of 1/sigma over the channel.
double total_mass(const ScalarField3D& sigma);

/// Sup norm of d rho/dt + div_h(rho v) + dz(rho w) with d rho/dt taken as
/// -sigma_tendency / sigma^2.
double continuity_residual(const State& state, const ScalarField3D& sigma_tendency,
                           const PhysParams& params);

/// All derived fields at once. Negative heating below -tol_bc is reported as
/// a warning, not an error.
DiagnosticFields diagnose(const State& state, const PhysParams& params, double tol_bc = 1e-11);

}  // namespace cpe
