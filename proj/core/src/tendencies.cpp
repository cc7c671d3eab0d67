#include "cpe/tendencies.hpp"

#include <sstream>

#include "cpe/errors.hpp"
#include "cpe/spectral.hpp"
#include "pipeline.hpp"

namespace cpe {

namespace sp = spectral;

void check_positivity(const State& state, const PhysParams& params, const TendencyOptions& opts,
                      std::vector<std::string>* warnings) {
  state.require_finite("tendency input");
  const double smin = state.sigma.min();
  const double pmin = state.p.min();
  if (smin <= opts.sigma_fault) {
    std::ostringstream os;
    os << "min sigma = " << smin << " at or below fault floor " << opts.sigma_fault;
    throw SigmaPositivityLost(os.str());
  }
  if (pmin <= opts.p_fault) {
    std::ostringstream os;
    os << "min p = " << pmin << " at or below fault floor " << opts.p_fault;
    throw PressurePositivityLost(os.str());
  }
  if (!warnings) return;
  if (smin < 0.5 * params.sigma_floor()) {
    std::ostringstream os;
    os << "min sigma below half the floor " << params.sigma_floor();
    warnings->push_back(os.str());
  }
  if (pmin < 0.5 * params.p_floor()) {
    std::ostringstream os;
    os << "min p below half the floor " << params.p_floor();
    warnings->push_back(os.str());
  }
}

VectorField3D2C phi1(const State& state, const PhysParams& params) {
  check_positivity(state, params, {}, nullptr);
  detail::Pipeline pipe(state.v, &state.sigma, &state.p, params);
  auto f = pipe.phi1();
  return VectorField3D2C(sp::inverse(f[0], state.grid()), sp::inverse(f[1], state.grid()));
}

ScalarField3D phi2(const State& state, const PhysParams& params) {
  check_positivity(state, params, {}, nullptr);
  detail::Pipeline pipe(state.v, &state.sigma, &state.p, params);
  return sp::inverse(pipe.phi2(), state.grid());
}

ScalarField2D phi3(const VectorField3D2C& v, const ScalarField2D& p, const PhysParams& params) {
  v.require_finite("phi3");
  p.require_finite("phi3");
  if (p.min() <= 0.0) throw PressurePositivityLost("phi3: non-positive pressure");
  detail::Pipeline pipe(v, nullptr, &p, params);
  return sp::inverse(pipe.phi3(), v.grid());
}

Sources source_terms(const State& state, const PhysParams& params) {
  check_positivity(state, params, {}, nullptr);
  const Grid& g = state.grid();
  detail::Pipeline pipe(state.v, &state.sigma, &state.p, params);
  auto f1 = pipe.phi1();
  sp::Spectrum3D n2 = pipe.phi2();
  n2 += pipe.sigma_advection();
  sp::Spectrum2D n3 = pipe.phi3();
  n3 += pipe.p_advection();
  return Sources{VectorField3D2C(sp::inverse(f1[0], g), sp::inverse(f1[1], g)),
                 sp::inverse(n2, g), sp::inverse(n3, g)};
}

StateTendency regularized_tendency(const State& state, const PhysParams& params,
                                   const TendencyOptions& opts,
                                   std::vector<std::string>* warnings) {
  check_positivity(state, params, opts, warnings);
  detail::Pipeline pipe(state.v, &state.sigma, &state.p, params);
  StateTendency t = pipe.tendency(state.grid());
  t.dv.require_finite("dv");
  t.dsigma.require_finite("dsigma");
  t.dp.require_finite("dp");
  return t;
}

}  // namespace cpe
