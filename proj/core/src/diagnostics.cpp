#include "cpe/diagnostics.hpp"

#include <cmath>
#include <sstream>

#include "cpe/errors.hpp"
#include "cpe/operators.hpp"
#include "cpe/spectral.hpp"
#include "modal.hpp"
#include "pipeline.hpp"

namespace cpe {

namespace sp = spectral;

namespace {

void require_positive_p(const ScalarField2D& p, const char* what) {
  p.require_finite(what);
  if (p.min() <= 0.0) {
    std::ostringstream os;
    os << what << ": min p = " << p.min();
    throw PressurePositivityLost(os.str());
  }
}

void require_positive_sigma(const ScalarField3D& sigma, const char* what) {
  sigma.require_finite(what);
  if (sigma.min() <= 0.0) {
    std::ostringstream os;
    os << what << ": min sigma = " << sigma.min();
    throw SigmaPositivityLost(os.str());
  }
}

ScalarField3D w_field(detail::Pipeline& pipe, const Grid& grid) {
  detail::Modal m{pipe.w_sine(), sp::Spectrum2D(grid.dims()), pipe.w_ramp()};
  return detail::from_modal(m, grid);
}

}  // namespace

HeatingFields heating(const VectorField3D2C& v, const PhysParams& params) {
  v.require_finite("heating");
  detail::Pipeline pipe(v, nullptr, nullptr, params);
  const Grid& g = v.grid();
  auto s = pipe.stress();
  return HeatingFields{sp::inverse(pipe.heating(), g),
                       {sp::inverse(s[0], g), sp::inverse(s[1], g), sp::inverse(s[2], g)}};
}

ScalarField3D phi(const VectorField3D2C& v, const ScalarField2D& p, const PhysParams& params) {
  v.require_finite("phi");
  require_positive_p(p, "phi");
  detail::Pipeline pipe(v, nullptr, &p, params);
  return sp::inverse(pipe.phi(), v.grid());
}

ScalarField3D vertical_velocity(const ScalarField3D& sigma, const VectorField3D2C& v,
                                const ScalarField2D& p, const PhysParams& params) {
  v.require_finite("vertical_velocity");
  sigma.require_finite("vertical_velocity");
  require_positive_p(p, "vertical_velocity");
  detail::Pipeline pipe(v, &sigma, &p, params);
  return w_field(pipe, v.grid());
}

ThermoFields reconstruct_thermo(const ScalarField3D& sigma, const ScalarField2D& p,
                                const PhysParams& params) {
  require_positive_sigma(sigma, "reconstruct_thermo");
  require_positive_p(p, "reconstruct_thermo");
  const Grid& g = sigma.grid();
  ScalarField3D rho(g), theta(g);
  const std::size_t plane = g.plane_size();
  for (std::size_t n = 0; n < sigma.size(); ++n) {
    rho.raw()[n] = 1.0 / sigma.raw()[n];
    theta.raw()[n] = sigma.raw()[n] * p.raw()[n % plane] / params.gas_constant();
  }
  return {std::move(rho), std::move(theta)};
}

double total_mass(const ScalarField3D& sigma) {
  require_positive_sigma(sigma, "total_mass");
  ScalarField3D rho(sigma.grid());
  for (std::size_t n = 0; n < sigma.size(); ++n) rho.raw()[n] = 1.0 / sigma.raw()[n];
  const sp::Spectrum3D s = sp::forward(rho);
  return s.at(0, 0, 0).real() * Grid::volume();
}

double continuity_residual(const State& state, const ScalarField3D& sigma_tendency,
                           const PhysParams& params) {
  require_positive_sigma(state.sigma, "continuity_residual");
  const ThermoFields th = reconstruct_thermo(state.sigma, state.p, params);
  const ScalarField3D& rho = th.rho;
  const ScalarField3D w = vertical_velocity(state.sigma, state.v, state.p, params);
  ScalarField3D r = divergence_h(VectorField3D2C(multiply_dealiased(rho, state.v[0]),
                                                 multiply_dealiased(rho, state.v[1])));
  r += ddz(multiply_dealiased(rho, w));
  r -= multiply_dealiased(multiply_dealiased(rho, rho), sigma_tendency);
  return r.max_abs();
}

DiagnosticFields diagnose(const State& state, const PhysParams& params, double tol_bc) {
  state.require_finite("diagnose");
  require_positive_sigma(state.sigma, "diagnose");
  require_positive_p(state.p, "diagnose");
  const Grid& g = state.grid();
  detail::Pipeline pipe(state.v, &state.sigma, &state.p, params);
  ThermoFields th = reconstruct_thermo(state.sigma, state.p, params);
  auto s = pipe.stress();
  DiagnosticFields d{w_field(pipe, g),
                     sp::inverse(pipe.phi(), g),
                     sp::inverse(pipe.heating(), g),
                     {sp::inverse(s[0], g), sp::inverse(s[1], g), sp::inverse(s[2], g)},
                     std::move(th.rho),
                     std::move(th.theta),
                     {}};
  if (d.Q.min() < -tol_bc) {
    std::ostringstream os;
    os << "heating negative: min Q = " << d.Q.min();
    d.warnings.push_back(os.str());
  }
  return d;
}

}  // namespace cpe
