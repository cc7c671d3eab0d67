#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cpe/energy.hpp"
#include "cpe/errors.hpp"
#include "cpe/experiments.hpp"
#include "cpe/inequality_lab.hpp"
#include "cpe/initial_conditions.hpp"
#include "cpe/manufactured.hpp"
#include "cpe/norms.hpp"
#include "cpe/parallel.hpp"
#include "cpe/random_fields.hpp"
#include "cpe/tendencies.hpp"
#include "oracles.hpp"

using namespace cpe;
using oracle::pi;

TEST_CASE("Sobolev norms on closed forms") {
  const Grid g(16, 16, 8);
  for (int k = 0; k <= 4; ++k)
    CHECK(sobolev_norm(ScalarField2D::constant(g, -3.0), k) == doctest::Approx(3.0 * 2 * pi).epsilon(1e-14));
  const auto cx = ScalarField2D::from_function(g, [](double x, double) { return std::cos(x); });
  const double h1 = oracle::area * oracle::simpson([](double x) { return std::cos(x) * std::cos(x) + std::sin(x) * std::sin(x); }, 0, 2 * pi) / (2 * pi);
  CHECK(sobolev_norm_sq(cx, 1) == doctest::Approx(h1).epsilon(1e-13));
  CHECK(sobolev_norm_sq(cx, 1) == doctest::Approx(39.478).epsilon(1e-4));

  const auto cz = ScalarField3D::from_function(g, [](double, double, double z) { return std::cos(pi * z); });
  // ||cos pi z||^2 = area / 2, ||dz||^2 = pi^2 area / 2
  CHECK(sobolev_norm_sq(cz, 1) == doctest::Approx(oracle::area * (1 + pi * pi) / 2).epsilon(1e-13));
  CHECK_THROWS_AS(sobolev_norm(cz, 5), UsageFault);
  CHECK_THROWS_AS(sobolev_norm(cz, -1), UsageFault);
}

TEST_CASE("Sobolev norm properties on random fields") {
  const Grid g(16, 16, 16);
  Rng rng(31);
  const auto f = random_channel_field(g, 4, rng);
  const auto h = random_channel_field(g, 4, rng);
  for (int k = 0; k <= 3; ++k) {
    CHECK(sobolev_norm(f, k) <= sobolev_norm(f, k + 1));
    CHECK(sobolev_norm(2.0 * f, k) == doctest::Approx(2 * sobolev_norm(f, k)).epsilon(1e-12));
    CHECK(sobolev_norm(f + h, k) <= sobolev_norm(f, k) + sobolev_norm(h, k) + 1e-12);
  }
}

TEST_CASE("energy report on simple states") {
  const Grid g(8, 8, 8);
  const PhysParams prm;
  const State c = State::constant(g, 1.0, 1.0);
  DissipationSums sums;
  sums.observe(c, 0.0);
  const EnergyReport r = energy_report(c, prm, 0.0, sums);
  CHECK(r.E == doctest::Approx(2 * oracle::area).epsilon(1e-14));
  CHECK(r.mass == doctest::Approx(oracle::area).epsilon(1e-14));
  CHECK(r.int_v_h4 == 0.0);

  State s = c;
  s.sigma = ScalarField3D::from_function(g, [](double x, double, double) { return 1.0 + 0.5 * std::cos(x); });
  CHECK(energy_report(s, prm, 0.0, sums).min_sigma == doctest::Approx(0.5));

  InitialSpec spec;
  spec.family = "smooth-random";
  spec.seed = 2;
  State r0 = make_initial(g, prm, spec);
  DissipationSums run;
  double prev_v = 0, prev_s = 0;
  for (int n = 0; n < 5; ++n) {
    axpy(r0, 1e-3, regularized_tendency(r0, prm));
    run.observe(r0, n * 1e-3);
    CHECK(run.int_v_h4() >= prev_v);
    CHECK(run.int_dzsigma_h2() >= prev_s);
    prev_v = run.int_v_h4();
    prev_s = run.int_dzsigma_h2();
  }
  CHECK(prev_v > 0.0);
}

TEST_CASE("manufactured cases") {
  const Grid g(24, 24, 24);
  const PhysParams prm;
  for (double t : {0.0, 0.37}) {
    const State u = manufactured_state("A-osc", g, t);
    StateTendency d = regularized_tendency(u, prm);
    d -= manufactured_tendency("A-osc", g, t, prm);
    CHECK(d.max_abs() <= 1e-9);
  }
  const PhysParams pe = prm.with_epsilon(0.2);
  StateTendency d = regularized_tendency(manufactured_state("A-osc", g, 0.1), pe);
  d -= manufactured_tendency("A-osc", g, 0.1, pe);
  CHECK(d.max_abs() <= 1e-9);

  CHECK_THROWS_AS(manufactured_state("nope", g, 0.0), UsageFault);
  CHECK_THROWS_AS(manufactured_forcing("nope", prm), UsageFault);

  MmsConfig c;
  c.case_id = "constant";
  c.T = 2e-3;
  c.dts = {1e-3, 5e-4};
  c.temporal_n = 8;
  c.resolutions = {8};
  c.spatial_dt = 1e-3;
  const MmsTable t = mms_run(c);
  for (const auto& row : t.temporal) CHECK(row.error == 0.0);
  CHECK(t.spatial[0].error == 0.0);
  c.case_id = "bogus";
  CHECK_THROWS_AS(mms_run(c), UsageFault);
}

TEST_CASE("experiments on constant data are exactly trivial") {
  const Grid g(8, 8, 8);
  const State c = State::constant(g, 1.0, 1.0);
  EpsilonSweepConfig ec;
  ec.T = 5e-3;
  const auto es = epsilon_sweep(c, ec);
  for (const auto& r : es.rows) CHECK(r.distance == 0.0);

  PerturbationConfig pc;
  pc.T = 5e-3;
  pc.deltas = {0.0, 1e-3};
  const auto pr = continuous_dependence(c, random_direction(g, 2, 3), pc);
  CHECK(pr.rows[0].difference == 0.0);
  CHECK(pr.rows[0].dissipation == 0.0);
  CHECK(pr.rows[1].difference > 0.0);
}

TEST_CASE("line fit") {
  const LineFit f = fit_line({0, 1, 2, 3}, {1, 3, 5, 7});
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_line({1.0}, {2.0}), UsageFault);
}

TEST_CASE("parallel map keeps index order and rethrows") {
  const auto v = parallel_map<int>(50, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(parallel_map<int>(5, [](std::size_t i) -> int {
                    if (i == 3) throw std::runtime_error("x");
                    return 0;
                  }),
                  std::runtime_error);
}

TEST_CASE("inequality lab closed form and constant commutator") {
  const int n = 8;
  std::vector<double> f(n * n * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) f[i + n * (j + n * k)] = std::cos(2 * pi * i / n);
  Exponents e;
  e.m = 1;
  const auto s = evaluate_inequality(InequalityKind::Cal, e, n, f, f);
  CHECK(s.lhs == doctest::Approx(std::sqrt(std::pow(2 * pi, 3) / 2)).epsilon(1e-12));
  CHECK(s.lhs == doctest::Approx(11.14).epsilon(1e-3));

  InequalityConfig c;
  c.kind = InequalityKind::Come;
  c.trials = 10;
  c.band_limit = 3;
  c.constant_f = true;
  const auto st = inequality_sample(c);
  for (const auto& smp : st.samples) CHECK(smp.lhs == 0.0);
  CHECK(st.max_ratio == 0.0);
}

TEST_CASE("inequality lab determinism and validation") {
  InequalityConfig c;
  c.kind = InequalityKind::Cal;
  c.trials = 12;
  c.band_limit = 3;
  c.seed = 77;
  const auto a = inequality_sample(c);
  const auto b = inequality_sample(c);
  CHECK(a.grid == 14);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i].ratio == b.samples[i].ratio);
  CHECK(std::isfinite(a.max_ratio));
  int total = 0;
  for (int h : a.histogram) total += h;
  CHECK(total == 12);

  Exponents bad;
  bad.q = 2;
  bad.r1 = 4;
  bad.s1 = 2;
  CHECK_THROWS_AS(validate(bad, InequalityKind::Cal), UsageFault);
  Exponents odd;
  odd.q = 5;
  CHECK_THROWS_AS(validate(odd, InequalityKind::AlgMq), UsageFault);
  Exponents lp;
  lp.q = 2;
  lp.r1 = 4;
  lp.s1 = 4;
  lp.r2 = 3;
  lp.s2 = 6;
  CHECK_NOTHROW(validate(lp, InequalityKind::Come));
  c.exponents = lp;
  c.kind = InequalityKind::Come;
  c.trials = 3;
  CHECK(std::isfinite(inequality_sample(c).max_ratio));
  CHECK(parse_inequality_kind("CAL") == InequalityKind::Cal);
  CHECK_THROWS_AS(parse_inequality_kind("XYZ"), UsageFault);
}

TEST_CASE("algebra property sampled") {
  InequalityConfig c;
  c.kind = InequalityKind::AlgHk;
  c.trials = 30;
  c.band_limit = 3;
  const double m3 = inequality_sample(c).max_ratio;
  c.band_limit = 5;
  const double m5 = inequality_sample(c).max_ratio;
  CHECK(std::isfinite(m3));
  CHECK(m5 <= 1.5 * m3);
}
