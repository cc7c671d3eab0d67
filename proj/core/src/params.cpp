#include "cpe/params.hpp"

#include <cmath>

#include "cpe/errors.hpp"

namespace cpe {

namespace {

void require(bool ok, const char* key, const char* reason) {
  if (!ok) throw ConstraintFault(key, reason);
}

}  // namespace

PhysParams::PhysParams() : PhysParams(1.4, 1.0, 0.0, 1.0, 1.0) {}

PhysParams::PhysParams(double gamma, double mu, double lambda, double kappa,
                       double gas_constant, double epsilon, double sigma_floor,
                       double p_floor)
    : gamma_(gamma),
      mu_(mu),
      lambda_(lambda),
      kappa_(kappa),
      gas_constant_(gas_constant),
      epsilon_(epsilon),
      sigma_floor_(sigma_floor),
      p_floor_(p_floor) {
  for (double x : {gamma, mu, lambda, kappa, gas_constant, epsilon, sigma_floor, p_floor})
    require(std::isfinite(x), "physics", "all constants must be finite");
  require(gamma > 1.0, "gamma", "gamma > 1 violated");
  require(mu > 0.0, "mu", "mu > 0 violated");
  require(mu + lambda > 0.0, "lambda", "mu + lambda > 0 violated");
  require(kappa > 0.0, "kappa", "kappa > 0 violated");
  require(gas_constant > 0.0, "R", "R > 0 violated");
  require(epsilon >= 0.0, "epsilon", "epsilon >= 0 violated");
  require(sigma_floor > 0.0, "sigma_floor", "sigma_floor > 0 violated");
  require(p_floor > 0.0, "p_floor", "p_floor > 0 violated");
  nu_ = (gamma - 1.0) * kappa / (gamma * gas_constant);
}

PhysParams PhysParams::with_epsilon(double epsilon) const {
  return PhysParams(gamma_, mu_, lambda_, kappa_, gas_constant_, epsilon, sigma_floor_,
                    p_floor_);
}

PhysParams PhysParams::with_floors(double sigma_floor, double p_floor) const {
  return PhysParams(gamma_, mu_, lambda_, kappa_, gas_constant_, epsilon_, sigma_floor,
                    p_floor);
}

}  // namespace cpe
