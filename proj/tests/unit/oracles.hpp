#pragma once

// Closed forms and brute-force quadratures used as independent references.
// Nothing here calls into the library under test.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

constexpr double pi = std::numbers::pi;
constexpr double area = 4.0 * pi * pi;

// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

inline double nu(double gamma, double kappa, double R) { return (gamma - 1.0) * kappa / (gamma * R); }

// Example A: sigma = 1, v = (cos pi z, 0), p = 1, mu = 1, lambda = 0.
inline double example_a_phi(double z, double gamma) {
  // phi = -(gamma-1)/gamma * Q~ with Q = pi^2 sin^2(pi z) and Q~ = -(pi^2/2) cos 2 pi z
  return (gamma - 1.0) / gamma * 0.5 * pi * pi * std::cos(2 * pi * z);
}
inline double example_a_w(double z, double gamma) {
  return -simpson([&](double s) { return example_a_phi(s, gamma); }, 0.0, z, 2000);
}
inline double example_a_phi3(double gamma) {
  // (gamma-1) * int_0^1 pi^2 sin^2(pi z) dz
  return (gamma - 1.0) * simpson([](double z) { return pi * pi * std::sin(pi * z) * std::sin(pi * z); }, 0, 1);
}

// Total mass of sigma = 1 + b cos x over the unit-height channel.
inline double mass_cos_x(double b) {
  return 2 * pi * simpson([&](double x) { return 1.0 / (1.0 + b * std::cos(x)); }, 0, 2 * pi);
}

// stable_dt re-evaluated from its defining formula for v = 0, constant sigma.
inline double stable_dt_rest(int nx, int ny, int nz, double mu, double lambda, double nu,
                             double eps, double sigma, double c_cfl = 1.0) {
  const double kx = nx / 2, ky = ny / 2, kz = pi * nz;
  const double kh2 = kx * kx + ky * ky;
  const double k2 = kh2 + kz * kz;
  return c_cfl / (mu * sigma * k2 + (mu + lambda) * sigma * kh2 + nu * sigma * kz * kz + eps * kh2);
}

}  // namespace oracle
