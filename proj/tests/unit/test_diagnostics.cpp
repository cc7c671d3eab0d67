#include <doctest.h>

#include <cmath>

#include "cpe/diagnostics.hpp"
#include "cpe/errors.hpp"
#include "cpe/initial_conditions.hpp"
#include "cpe/operators.hpp"
#include "cpe/tendencies.hpp"
#include "oracles.hpp"

using namespace cpe;
using oracle::pi;

namespace {

double max_err(const ScalarField3D& a, const std::function<double(double, double, double)>& f) {
  const Grid& g = a.grid();
  double d = 0.0;
  for (int k = 0; k <= g.nz(); ++k)
    for (int j = 0; j < g.ny(); ++j)
      for (int i = 0; i < g.nx(); ++i) d = std::max(d, std::abs(a.at(i, j, k) - f(g.x(i), g.y(j), g.z(k))));
  return d;
}

State example_a(const Grid& g) {
  InitialSpec spec;
  spec.family = "example-A";
  spec.amplitude = 1.0;
  return make_initial(g, PhysParams(), spec);
}

State random_state(const Grid& g, std::uint64_t seed, double amplitude = 0.2) {
  InitialSpec spec;
  spec.family = "smooth-random";
  spec.amplitude = amplitude;
  spec.seed = seed;
  return make_initial(g, PhysParams(), spec);
}

}  // namespace

TEST_CASE("heating") {
  const Grid g(16, 16, 16);
  const PhysParams prm;
  const auto h0 = heating(VectorField3D2C(g), prm);
  CHECK(h0.Q.max_abs() == 0.0);
  for (const auto& s : h0.Sh) CHECK(s.max_abs() == 0.0);

  const State a = example_a(g);
  CHECK(max_err(heating(a.v, prm).Q, [](double, double, double z) { return pi * pi * std::pow(std::sin(pi * z), 2); }) <= 1e-11);

  VectorField3D2C v(g);
  v[0] = ScalarField3D::from_function(g, [](double, double y, double) { return std::sin(y); });
  const auto hv = heating(v, prm);
  CHECK(max_err(hv.Q, [](double, double y, double) { return std::pow(std::cos(y), 2); }) <= 1e-12);
  CHECK(max_err(hv.Sh[1], [](double, double y, double) { return std::cos(y); }) <= 1e-12);

  const State r = random_state(g, 4);
  VectorField3D2C r2 = r.v;
  r2 *= 2.0;
  const auto q1 = heating(r.v, prm).Q;
  const auto q2 = heating(r2, prm).Q;
  double d = 0.0;
  for (std::size_t n = 0; n < q1.size(); ++n) d = std::max(d, std::abs(q2.raw()[n] - 4 * q1.raw()[n]));
  CHECK(d <= 1e-11);
}

TEST_CASE("phi closed forms and zero vertical average") {
  const Grid g(16, 16, 16);
  const PhysParams prm;
  CHECK(phi(VectorField3D2C(g), ScalarField2D::constant(g, 1.0), prm).max_abs() == 0.0);

  const State a = example_a(g);
  const auto ph = phi(a.v, a.p, prm);
  CHECK(max_err(ph, [](double, double, double z) { return oracle::example_a_phi(z, 1.4); }) <= 1e-12);
  CHECK(oracle::example_a_phi(0.0, 1.4) == doctest::Approx(pi * pi / 7));

  VectorField3D2C flat(g);
  flat[0] = ScalarField3D::from_function(g, [](double x, double y, double) { return std::sin(x) + std::cos(y); });
  const auto p = ScalarField2D::from_function(g, [](double x, double) { return 1.0 + 0.2 * std::cos(x); });
  CHECK(phi(flat, p, prm).max_abs() <= 1e-13);

  const State r = random_state(g, 8);
  VectorField3D2C shifted = r.v;
  for (double& x : shifted[0].values()) x += 0.7;
  const auto p1 = phi(r.v, r.p, prm);
  const auto p2 = phi(shifted, r.p, prm);
  double d = 0.0;
  for (std::size_t n = 0; n < p1.size(); ++n) d = std::max(d, std::abs(p1.raw()[n] - p2.raw()[n]));
  CHECK(d <= 1e-12);
  CHECK(vertical_average(p1).max_abs() <= 1e-11);

  CHECK_THROWS_AS(phi(r.v, ScalarField2D::constant(g, 0.0), prm), PressurePositivityLost);
}

TEST_CASE("vertical velocity") {
  const Grid g(16, 16, 16);
  const PhysParams prm;
  const auto one = ScalarField2D::constant(g, 1.0);
  CHECK(vertical_velocity(ScalarField3D::constant(g, 2.0), VectorField3D2C(g), one, prm).max_abs() == 0.0);

  const State a = example_a(g);
  const auto w = vertical_velocity(a.sigma, a.v, a.p, prm);
  CHECK(max_err(w, [](double, double, double z) { return -(pi / 14) * std::sin(2 * pi * z); }) <= 1e-12);
  CHECK(max_err(w, [](double, double, double z) { return oracle::example_a_w(z, 1.4); }) <= 1e-9);

  const auto sig = ScalarField3D::from_function(g, [](double, double, double z) { return 1.0 + 0.1 * std::cos(pi * z); });
  const double nu = oracle::nu(1.4, 1.0, 1.0);
  CHECK(max_err(vertical_velocity(sig, VectorField3D2C(g), one, prm),
                [&](double, double, double z) { return -0.1 * nu * pi * std::sin(pi * z); }) <= 1e-12);

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const State r = random_state(g, seed);
    const auto wr = vertical_velocity(r.sigma, r.v, r.p, prm);
    double top = 0.0;
    for (int j = 0; j < g.ny(); ++j)
      for (int i = 0; i < g.nx(); ++i) {
        CHECK(wr.at(i, j, 0) == 0.0);
        top = std::max(top, std::abs(wr.at(i, j, g.nz())));
      }
    CHECK(top <= 1e-11);
  }
}

TEST_CASE("thermodynamic reconstruction") {
  const Grid g(8, 8, 8);
  const PhysParams prm;
  const auto th = reconstruct_thermo(ScalarField3D::constant(g, 2.0), ScalarField2D::constant(g, 1.0), prm);
  CHECK(th.rho.max() == doctest::Approx(0.5));
  CHECK(th.theta.max() == doctest::Approx(2.0));
  const State r = random_state(g, 5);
  const auto t = reconstruct_thermo(r.sigma, r.p, prm);
  double d = 0.0, e = 0.0;
  for (int k = 0; k <= g.nz(); ++k)
    for (int j = 0; j < g.ny(); ++j)
      for (int i = 0; i < g.nx(); ++i) {
        d = std::max(d, std::abs(prm.gas_constant() * t.rho.at(i, j, k) * t.theta.at(i, j, k) - r.p.at(i, j)));
        e = std::max(e, std::abs(1.0 / t.rho.at(i, j, k) - r.sigma.at(i, j, k)));
      }
  CHECK(d <= 1e-13);
  CHECK(e <= 1e-13);
  CHECK_THROWS_AS(reconstruct_thermo(ScalarField3D::constant(g, -1.0), r.p, prm), SigmaPositivityLost);
}

TEST_CASE("total mass") {
  const Grid g(32, 8, 8);
  CHECK(total_mass(ScalarField3D::constant(g, 2.0)) == doctest::Approx(oracle::area / 2).epsilon(1e-14));
  CHECK(total_mass(ScalarField3D::constant(g, 1.0)) == doctest::Approx(oracle::area).epsilon(1e-14));
  const auto s = ScalarField3D::from_function(g, [](double x, double, double) { return 1.0 + 0.5 * std::cos(x); });
  const double ref = oracle::mass_cos_x(0.5);
  CHECK(ref == doctest::Approx(45.585).epsilon(1e-4));
  CHECK(std::abs(total_mass(s) - ref) <= 1e-9);
  CHECK_THROWS_AS(total_mass(ScalarField3D::constant(g, 0.0)), SigmaPositivityLost);
}

TEST_CASE("continuity residual") {
  const PhysParams prm;
  {
    const Grid g(8, 8, 8);
    const State c = State::constant(g, 1.5, 2.0);
    CHECK(continuity_residual(c, ScalarField3D(g), prm) <= 1e-12);
  }
  const Grid g(32, 32, 32);
  const State a = example_a(g);
  CHECK(continuity_residual(a, regularized_tendency(a, prm).dsigma, prm) <= 1e-8);

  const State r = [&] {
    State s = State::constant(g, 1.0, 1.0);
    s.sigma = ScalarField3D::from_function(g, [](double x, double, double) { return 1.0 + 0.1 * std::cos(x); });
    return s;
  }();
  const double eps = 0.01;
  const double res = continuity_residual(r, regularized_tendency(r, prm.with_epsilon(eps)).dsigma, prm);
  double ref = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double x = 2 * pi * i / 2000;
    ref = std::max(ref, std::abs(eps * 0.1 * std::cos(x) / std::pow(1 + 0.1 * std::cos(x), 2)));
  }
  CHECK(std::abs(res - ref) <= 1e-8);
}

TEST_CASE("diagnose bundles every derived field") {
  const Grid g(16, 16, 16);
  const State r = random_state(g, 9);
  const PhysParams prm(1.4, 1.0, -0.5, 1.0, 1.0);
  const auto d = diagnose(r, prm);
  CHECK(d.Q.min() >= -1e-11);
  CHECK(d.warnings.empty());
  CHECK(d.w.max_abs_at_walls() <= 1e-11);
  CHECK(vertical_average(d.phi).max_abs() <= 1e-11);
}
