#include "cpe/manufactured.hpp"

#include <cmath>
#include <numbers>

#include "cpe/errors.hpp"

namespace cpe {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Case { Constant, AOsc };

Case lookup(const std::string& id) {
  if (id == "constant") return Case::Constant;
  if (id == "A-osc") return Case::AOsc;
  throw UsageFault("unknown manufactured case '" + id + "'");
}

// Pointwise closed forms of the A-osc case.
struct AOscPoint {
  double v1, sigma, p;
  double dv1, dsigma, dp;
};

AOscPoint a_osc(double x, double z, double t, const PhysParams& prm) {
  const double a = std::exp(-t);
  const double C = std::cos(x), S = std::sin(x);
  const double c = std::cos(kPi * z), s = std::sin(kPi * z);
  const double c2 = std::cos(2 * kPi * z), s2 = std::sin(2 * kPi * z);
  const double mu = prm.mu(), lam = prm.lambda(), g = prm.gamma(), nu = prm.nu(), eps = prm.epsilon();

  AOscPoint r{};
  r.v1 = a * c * C;
  r.sigma = 1.0 + 0.1 * a * c;
  r.p = 1.0 + 0.1 * a * C;

  const double qbar = 0.5 * a * a * ((2 * mu + lam) * S * S + mu * kPi * kPi * C * C);
  const double cx = 0.5 * a * a * ((2 * mu + lam) * S * S - mu * kPi * kPi * C * C);
  const double gp = g * r.p;
  const double phi = -a * c * S + (-0.1 * a * a * c * C * S - (g - 1) * cx * c2) / gp;
  const double int_phi =
      -a * S * s / kPi + (-0.1 * a * a * C * S * s / kPi - (g - 1) * cx * s2 / (2 * kPi)) / gp;
  const double dz_sigma = -0.1 * a * kPi * s;
  const double w = nu * dz_sigma - int_phi;

  r.dv1 = a * a * c * c * C * S + w * a * kPi * s * C + 0.1 * r.sigma * a * S -
          r.sigma * (mu * (1 + kPi * kPi) + (mu + lam)) * a * c * C;
  r.dsigma = -w * dz_sigma + r.sigma * (-a * c * S - phi) + nu * r.sigma * (-0.1 * a * kPi * kPi * c);
  r.dp = (g - 1) * qbar - 0.1 * eps * a * C;
  return r;
}

template <class F>
State fill(const Grid& grid, F&& f) {
  State s(grid);
  for (int k = 0; k < grid.nz() + 1; ++k)
    for (int j = 0; j < grid.ny(); ++j)
      for (int i = 0; i < grid.nx(); ++i) {
        const auto [v1, sig] = f(grid.x(i), grid.z(k), true);
        s.v[0].at(i, j, k) = v1;
        s.sigma.at(i, j, k) = sig;
      }
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) s.p.at(i, j) = f(grid.x(i), 0.0, false).second;
  return s;
}

}  // namespace

std::vector<std::string> manufactured_cases() { return {"constant", "A-osc"}; }

State manufactured_state(const std::string& id, const Grid& grid, double t) {
  if (lookup(id) == Case::Constant) return State::constant(grid, 1.0, 1.0);
  const PhysParams prm;
  return fill(grid, [&](double x, double z, bool vol) {
    const AOscPoint q = a_osc(x, z, t, prm);
    return vol ? std::pair{q.v1, q.sigma} : std::pair{0.0, q.p};
  });
}

StateTendency manufactured_time_derivative(const std::string& id, const Grid& grid, double t) {
  StateTendency d(grid);
  if (lookup(id) == Case::Constant) return d;
  const double a = std::exp(-t);
  for (int k = 0; k < grid.nz() + 1; ++k)
    for (int j = 0; j < grid.ny(); ++j)
      for (int i = 0; i < grid.nx(); ++i) {
        const double c = std::cos(kPi * grid.z(k));
        d.dv[0].at(i, j, k) = -a * c * std::cos(grid.x(i));
        d.dsigma.at(i, j, k) = -0.1 * a * c;
      }
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) d.dp.at(i, j) = -0.1 * a * std::cos(grid.x(i));
  return d;
}

StateTendency manufactured_tendency(const std::string& id, const Grid& grid, double t,
                                    const PhysParams& params) {
  StateTendency d(grid);
  if (lookup(id) == Case::Constant) return d;
  for (int k = 0; k < grid.nz() + 1; ++k)
    for (int j = 0; j < grid.ny(); ++j)
      for (int i = 0; i < grid.nx(); ++i) {
        const AOscPoint q = a_osc(grid.x(i), grid.z(k), t, params);
        d.dv[0].at(i, j, k) = q.dv1;
        d.dsigma.at(i, j, k) = q.dsigma;
      }
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) d.dp.at(i, j) = a_osc(grid.x(i), 0.0, t, params).dp;
  return d;
}

Forcing manufactured_forcing(const std::string& id, const PhysParams& params) {
  if (lookup(id) == Case::Constant) return [](const State&, double, StateTendency&) {};
  return [id, params](const State& s, double t, StateTendency& out) {
    out += manufactured_time_derivative(id, s.grid(), t);
    out -= manufactured_tendency(id, s.grid(), t, params);
  };
}

}  // namespace cpe
