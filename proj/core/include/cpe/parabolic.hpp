#pragma once

#include <optional>
#include <vector>

#include "cpe/field.hpp"
#include "cpe/torus.hpp"

namespace cpe {

/// Scalar or two-component horizontal vector field on the torus.
using TorusVector = std::vector<ExtendedField>;

/// Coefficients of L u = a lap u + b grad_h div_h u + c dzz u + e lap_h u.
/// Absent fields contribute nothing; b applies to two-component fields only.
struct ParabolicCoefficients {
  std::optional<ExtendedField> a;
  std::optional<ExtendedField> b;
  std::optional<ExtendedField> c;
  double e = 0.0;
};

/// L with its coefficients pre-sampled on the padded grid. Products are
/// dealiased, so evenly symmetric inputs stay symmetric.
class ParabolicOperator {
 public:
  ParabolicOperator(const ParabolicCoefficients& coeffs, const TorusGrid& grid);

  TorusVector apply(const TorusVector& u) const;
  /// Largest stable RK4 step: c_cfl / (max a k2max + max b kh2max + max c kz2max + e kh2max).
  double stable_dt(double c_cfl = 2.0) const;
  const TorusGrid& grid() const noexcept { return grid_; }

 private:
  TorusGrid grid_;
  TorusGrid fine_;
  std::optional<std::vector<double>> a_, b_, c_;
  double amax_ = 0.0, bmax_ = 0.0, cmax_ = 0.0;
  double e_;
};

struct ParabolicProblem {
  ParabolicCoefficients coeffs;
  TorusVector u0;
  /// Time-independent forcing; empty means zero.
  TorusVector f;
  double T = 0.0;
  double a_floor = 1e-12;
};

/// dt = 0 selects the largest stable step for the given c_cfl; the horizon is
/// then split into equal steps.
struct DtPolicy {
  double dt = 0.0;
  double c_cfl = 2.0;
};

/// Explicit RK4 integration of du/dt = L u + f on [0, T]. Throws
/// StabilityFault if the sup norm grows more than tenfold in one step.
TorusVector advance_parabolic(const ParabolicProblem& problem, const DtPolicy& policy = {});

/// dV/dt = mu sigma lap V + (mu + lambda) sigma grad_h div_h V + f on the channel.
struct VelocityProblem {
  ScalarField3D sigma;
  double mu = 1.0;
  double lambda = 0.0;
  VectorField3D2C f;
  VectorField3D2C V0;
  double T = 0.0;
};

/// dS/dt = nu sigma dzz S + eps lap_h S + g on the channel.
struct SigmaProblem {
  ScalarField3D sigma;
  double nu = 1.0;
  double epsilon = 0.0;
  ScalarField3D g;
  ScalarField3D S0;
  double T = 0.0;
};

/// Extends evenly, advances on the torus and restricts back.
VectorField3D2C solve_channel_parabolic(const VelocityProblem& problem,
                                        const DtPolicy& policy = {});
ScalarField3D solve_channel_parabolic(const SigmaProblem& problem, const DtPolicy& policy = {});

}  // namespace cpe
