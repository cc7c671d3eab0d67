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

double max_err(const ScalarField2D& a, const std::function<double(double, double)>& f) {
  const Grid& g = a.grid();
  double d = 0.0;
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i) d = std::max(d, std::abs(a.at(i, j) - f(g.x(i), g.y(j))));
  return d;
}

State example_a(const Grid& g) {
  InitialSpec spec;
  spec.family = "example-A";
  spec.amplitude = 1.0;
  return make_initial(g, PhysParams(), spec);
}

State random_state(const Grid& g, std::uint64_t seed) {
  InitialSpec spec;
  spec.family = "smooth-random";
  spec.amplitude = 0.2;
  spec.seed = seed;
  return make_initial(g, PhysParams(), spec);
}

}  // namespace

TEST_CASE("phi1") {
  const Grid g(16, 16, 16);
  const PhysParams prm;
  State s = State::constant(g, 1.3, 2.0);
  CHECK(phi1(s, prm).max_abs() == 0.0);
  s = State::constant(g, 1.0, 1.0);
  s.p = ScalarField2D::from_function(g, [](double x, double) { return 1.0 + 0.1 * std::cos(x); });
  const auto f = phi1(s, prm);
  CHECK(max_err(f[0], [](double x, double, double) { return 0.1 * std::sin(x); }) <= 1e-13);
  CHECK(f[1].max_abs() <= 1e-13);

  const auto fa = phi1(example_a(g), prm);
  // -w dz v with w = -(pi/14) sin 2 pi z and dz v1 = -pi sin pi z
  CHECK(max_err(fa[0], [](double, double, double z) {
          return -(pi / 14) * std::sin(2 * pi * z) * pi * std::sin(pi * z);
        }) <= 1e-12);
}

TEST_CASE("phi1 sign convention against the advective form") {
  const Grid g(16, 16, 16);
  const PhysParams prm;
  const auto fa = phi1(example_a(g), prm);
  double ref_max = 0.0;
  for (int k = 0; k <= 16; ++k) {
    const double z = k / 16.0;
    const double w = oracle::example_a_w(z, 1.4);
    const double dzv = -pi * std::sin(pi * z);
    ref_max = std::max(ref_max, std::abs(fa[0].at(0, 0, k) - (-w * dzv)));
  }
  CHECK(ref_max <= 1e-9);
}

TEST_CASE("phi2 and phi3") {
  const Grid g(16, 16, 16);
  const PhysParams prm;
  CHECK(phi2(State::constant(g, 2.0, 1.0), prm).max_abs() == 0.0);
  const State a = example_a(g);
  CHECK(max_err(phi2(a, prm), [](double, double, double z) { return -(pi * pi / 7) * std::cos(2 * pi * z); }) <= 1e-12);

  State s = State::constant(g, 1.5, 1.0);
  s.v[0] = ScalarField3D::from_function(g, [](double x, double, double) { return std::sin(x); });
  CHECK(max_err(phi2(s, prm), [](double x, double, double) { return 1.5 * std::cos(x); }) <= 1e-12);

  CHECK(phi3(VectorField3D2C(g), ScalarField2D::constant(g, 1.0), prm).max_abs() == 0.0);
  const double ref = oracle::example_a_phi3(1.4);
  CHECK(ref == doctest::Approx(0.2 * pi * pi).epsilon(1e-12));
  CHECK(max_err(phi3(a.v, a.p, prm), [&](double, double) { return ref; }) <= 1e-9);

  VectorField3D2C v(g);
  v[0] = ScalarField3D::from_function(g, [](double, double y, double) { return std::sin(y); });
  CHECK(max_err(phi3(v, ScalarField2D::constant(g, 1.0), prm),
                [](double, double y) { return 0.4 * std::pow(std::cos(y), 2); }) <= 1e-12);
}

TEST_CASE("regularized tendency on closed-form states") {
  const Grid g(16, 16, 16);
  for (double eps : {0.0, 1e-3, 1.0}) {
    const PhysParams prm = PhysParams().with_epsilon(eps);
    CHECK(regularized_tendency(State::constant(g, 0.8, 1.7), prm).max_abs() <= 1e-12);
  }
  const PhysParams prm;
  const State a = example_a(g);
  const auto t = regularized_tendency(a, prm);
  CHECK(max_err(t.dsigma, [](double, double, double z) { return -(pi * pi / 7) * std::cos(2 * pi * z); }) <= 1e-12);
  CHECK(max_err(t.dp, [](double, double) { return 0.2 * pi * pi; }) <= 1e-12);

  State shifted = State::constant(g, 1.2, 1.0);
  for (double& x : shifted.p.values()) x += 3.0;
  CHECK(regularized_tendency(shifted, prm).max_abs() == 0.0);
}

TEST_CASE("epsilon enters linearly") {
  const Grid g(16, 16, 8);
  const State r = random_state(g, 12);
  const PhysParams p1 = PhysParams().with_epsilon(0.3), p2 = PhysParams().with_epsilon(0.05);
  StateTendency d = regularized_tendency(r, p1);
  d -= regularized_tendency(r, p2);
  d.dsigma.axpy(-0.25, laplacian_h(r.sigma));
  d.dp.axpy(-0.25, laplacian_h(r.p));
  CHECK(d.max_abs() <= 1e-12);
}

TEST_CASE("Neumann compatibility and mass budget of the tendency") {
  const Grid g(32, 32, 32);
  const State r = random_state(g, 14);
  const PhysParams prm;
  const auto t = regularized_tendency(r, prm);
  CHECK(neumann_defect(t.dv[0]) <= 1e-9);
  CHECK(neumann_defect(t.dv[1]) <= 1e-9);
  CHECK(neumann_defect(t.dsigma) <= 1e-9);
  // d/dt int 1/sigma = int -dsigma / sigma^2
  ScalarField3D integrand(g);
  for (std::size_t n = 0; n < integrand.size(); ++n)
    integrand.raw()[n] = -t.dsigma.raw()[n] / (r.sigma.raw()[n] * r.sigma.raw()[n]);
  const ScalarField2D avg = vertical_average(integrand);
  double mean = 0.0;
  for (double x : avg.values()) mean += x;
  mean *= oracle::area / static_cast<double>(g.size2());
  CHECK(std::abs(mean) <= 1e-9);
}

TEST_CASE("source terms") {
  const Grid g(16, 16, 16);
  const PhysParams prm;
  const State r = random_state(g, 15);
  const Sources s = source_terms(r, prm);
  const auto p1 = phi1(r, prm);
  CHECK(std::max(std::abs((s.n1[0] - p1[0]).max_abs()), std::abs((s.n1[1] - p1[1]).max_abs())) <= 1e-13);
  const auto adv = multiply_dealiased(r.v[0], ddx(r.sigma)) + multiply_dealiased(r.v[1], ddy(r.sigma));
  CHECK((s.n2 + adv - phi2(r, prm)).max_abs() <= 1e-13);

  const Sources z = source_terms(State::constant(g, 1.0, 1.0), prm);
  CHECK(z.n1.max_abs() == 0.0);
  CHECK(z.n2.max_abs() == 0.0);
  CHECK(z.n3.max_abs() == 0.0);
  const State a = example_a(g);
  CHECK(max_err(source_terms(a, prm).n3, [](double, double) { return 0.2 * pi * pi; }) <= 1e-12);
}

TEST_CASE("positivity floors") {
  const Grid g(8, 8, 8);
  const PhysParams prm;
  CHECK_THROWS_AS(regularized_tendency(State::constant(g, 0.0, 1.0), prm), SigmaPositivityLost);
  CHECK_THROWS_AS(regularized_tendency(State::constant(g, 1.0, 1e-9), prm), PressurePositivityLost);
  std::vector<std::string> warnings;
  regularized_tendency(State::constant(g, 0.2, 1.0), prm, {}, &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("sigma") != std::string::npos);
}
