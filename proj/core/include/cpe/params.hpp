#pragma once

namespace cpe {

/// Physical and regularization constants of the primitive-equation model.
///
/// The constructor enforces gamma > 1, mu > 0, mu + lambda > 0, kappa > 0,
/// R > 0, epsilon >= 0 and positive floors, throwing ConstraintFault with the
/// offending name otherwise. The vertical diffusivity nu = (gamma-1) kappa /
/// (gamma R) is derived once and stored.
class PhysParams {
 public:
  PhysParams();
  PhysParams(double gamma, double mu, double lambda, double kappa, double gas_constant,
             double epsilon = 0.0, double sigma_floor = 0.5, double p_floor = 0.5);

  double gamma() const noexcept { return gamma_; }
  double mu() const noexcept { return mu_; }
  double lambda() const noexcept { return lambda_; }
  double kappa() const noexcept { return kappa_; }
  double gas_constant() const noexcept { return gas_constant_; }
  double nu() const noexcept { return nu_; }
  double epsilon() const noexcept { return epsilon_; }
  double sigma_floor() const noexcept { return sigma_floor_; }
  double p_floor() const noexcept { return p_floor_; }

  PhysParams with_epsilon(double epsilon) const;
  PhysParams with_floors(double sigma_floor, double p_floor) const;

 private:
  double gamma_;
  double mu_;
  double lambda_;
  double kappa_;
  double gas_constant_;
  double epsilon_;
  double sigma_floor_;
  double p_floor_;
  double nu_;
};

}  // namespace cpe
