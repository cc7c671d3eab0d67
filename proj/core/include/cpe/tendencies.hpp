#pragma once

#include <string>
#include <vector>

#include "cpe/field.hpp"
#include "cpe/params.hpp"
#include "cpe/state.hpp"

namespace cpe {

/// Hard positivity limits. Falling to or below these aborts evaluation; the
/// modeling floors in PhysParams only produce warnings at half their value.
struct TendencyOptions {
  double sigma_fault = 1e-8;
  double p_fault = 1e-8;
};

/// -(v . grad_h) v - w dz v - sigma grad_h p
VectorField3D2C phi1(const State& state, const PhysParams& params);
/// -w dz sigma + sigma (div_h v - phi)
ScalarField3D phi2(const State& state, const PhysParams& params);
/// (gamma - 1) Qbar - gamma p div_h vbar
ScalarField2D phi3(const VectorField3D2C& v, const ScalarField2D& p, const PhysParams& params);

/// Source terms of the frozen-coefficient linear problems used by the
/// Picard map: n1 = phi1, n2 = phi2 - v . grad sigma, n3 = phi3 - vbar . grad p.
struct Sources {
  VectorField3D2C n1;
  ScalarField3D n2;
  ScalarField2D n3;
};

Sources source_terms(const State& state, const PhysParams& params);

/// Right-hand side of the regularized system:
///   dv     = phi1 + mu sigma lap v + (mu + lambda) sigma grad_h div_h v
///   dsigma = -v . grad_h sigma + nu sigma dzz sigma + eps lap_h sigma + phi2
///   dp     = -vbar . grad_h p + eps lap_h p + phi3
/// Positivity warnings (min below half the modeling floor) are appended to
/// `warnings` when it is non-null.
StateTendency regularized_tendency(const State& state, const PhysParams& params,
                                   const TendencyOptions& opts = {},
                                   std::vector<std::string>* warnings = nullptr);

/// Throws SigmaPositivityLost / PressurePositivityLost when a minimum is at or
/// below the fault floor and records floor warnings.
void check_positivity(const State& state, const PhysParams& params, const TendencyOptions& opts,
                      std::vector<std::string>* warnings);

}  // namespace cpe
