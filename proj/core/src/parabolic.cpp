#include "cpe/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cpe/errors.hpp"
#include "cpe/rk4.hpp"

namespace cpe {

namespace {

using torus::Spectrum;

template <class F>
Spectrum scaled(const Spectrum& s, F&& factor) {
  Spectrum out(s.grid);
  const TorusGrid& g = s.grid;
  for (int k = 0; k < g.nzt(); ++k)
    for (int j = 0; j < g.ny(); ++j)
      for (int i = 0; i < s.nkx(); ++i) {
        const std::size_t n = s.index(k, j, i);
        out.c[n] = factor(torus::kx(g, i), torus::ky(g, j), torus::kz(g, k)) * s.c[n];
      }
  return out;
}

std::vector<double> on_fine(const Spectrum& s, const TorusGrid& fine) {
  return torus::inverse(torus::pad(s, fine)).raw();
}

double min_of(const ExtendedField& f) { return *std::min_element(f.raw().begin(), f.raw().end()); }

void accumulate(std::vector<double>& acc, const std::vector<double>& coef,
                const std::vector<double>& term) {
  for (std::size_t n = 0; n < acc.size(); ++n) acc[n] += coef[n] * term[n];
}

TorusVector& axpy_vec(TorusVector& y, double a, const TorusVector& k) {
  for (std::size_t c = 0; c < y.size(); ++c) y[c].axpy(a, k[c]);
  return y;
}

double max_abs_vec(const TorusVector& u) {
  double m = 0.0;
  for (const auto& c : u) m = std::max(m, c.max_abs());
  return m;
}

}  // namespace

ParabolicOperator::ParabolicOperator(const ParabolicCoefficients& coeffs, const TorusGrid& grid)
    : grid_(grid), fine_(grid.padded()), e_(coeffs.e) {
  auto sample = [&](const std::optional<ExtendedField>& f, std::optional<std::vector<double>>& dst,
                    double& fmax) {
    if (!f) return;
    if (!(f->grid() == grid_)) throw UsageFault("ParabolicOperator: coefficient grid mismatch");
    dst = on_fine(torus::forward(*f), fine_);
    fmax = f->max_abs();
  };
  sample(coeffs.a, a_, amax_);
  sample(coeffs.b, b_, bmax_);
  sample(coeffs.c, c_, cmax_);
  if (e_ < 0.0) throw UsageFault("ParabolicOperator: negative horizontal diffusivity");
}

TorusVector ParabolicOperator::apply(const TorusVector& u) const {
  if (u.empty() || u.size() > 2) throw UsageFault("ParabolicOperator: 1 or 2 components expected");
  std::vector<Spectrum> U;
  for (const auto& c : u) {
    if (!(c.grid() == grid_)) throw UsageFault("ParabolicOperator: field grid mismatch");
    U.push_back(torus::forward(c));
  }
  std::optional<Spectrum> div;
  if (b_ && U.size() == 2) {
    div = scaled(U[0], [](double kx, double, double) { return torus::cplx(0.0, kx); });
    const Spectrum dy = scaled(U[1], [](double, double ky, double) { return torus::cplx(0.0, ky); });
    for (std::size_t n = 0; n < div->c.size(); ++n) div->c[n] += dy.c[n];
  }
  TorusVector out;
  for (std::size_t comp = 0; comp < U.size(); ++comp) {
    const Spectrum& s = U[comp];
    Spectrum r(grid_);
    if (a_ || c_ || div) {
      std::vector<double> acc(fine_.size(), 0.0);
      if (a_)
        accumulate(acc, *a_, on_fine(scaled(s, [](double kx, double ky, double kz) {
                                        return torus::cplx(-(kx * kx + ky * ky + kz * kz), 0.0);
                                      }),
                                      fine_));
      if (div) {
        const bool xcomp = comp == 0;
        accumulate(acc, *b_, on_fine(scaled(*div, [xcomp](double kx, double ky, double) {
                                        return torus::cplx(0.0, xcomp ? kx : ky);
                                      }),
                                      fine_));
      }
      if (c_)
        accumulate(acc, *c_, on_fine(scaled(s, [](double, double, double kz) {
                                        return torus::cplx(-kz * kz, 0.0);
                                      }),
                                      fine_));
      r = torus::truncate(torus::forward(ExtendedField(fine_, std::move(acc))), grid_);
    }
    if (e_ != 0.0) {
      const Spectrum lh =
          scaled(s, [](double kx, double ky, double) { return torus::cplx(-(kx * kx + ky * ky), 0.0); });
      for (std::size_t n = 0; n < r.c.size(); ++n) r.c[n] += e_ * lh.c[n];
    }
    out.push_back(torus::inverse(r));
  }
  return out;
}

double ParabolicOperator::stable_dt(double c_cfl) const {
  const double kx = grid_.nx() / 2, ky = grid_.ny() / 2;
  const double kz = std::numbers::pi * grid_.nzt() / 2;
  const double kh2 = kx * kx + ky * ky;
  const double rate = amax_ * (kh2 + kz * kz) + bmax_ * kh2 + cmax_ * kz * kz + e_ * kh2;
  if (rate <= 0.0) return std::numeric_limits<double>::infinity();
  return c_cfl / rate;
}

TorusVector advance_parabolic(const ParabolicProblem& pb, const DtPolicy& policy) {
  if (!(pb.T > 0.0)) throw UsageFault("advance_parabolic: horizon must be positive");
  if (pb.u0.empty() || pb.u0.size() > 2) throw UsageFault("advance_parabolic: 1 or 2 components");
  if (!pb.f.empty() && pb.f.size() != pb.u0.size())
    throw UsageFault("advance_parabolic: forcing component count mismatch");
  if (pb.coeffs.a && min_of(*pb.coeffs.a) < pb.a_floor)
    throw UsageFault("advance_parabolic: coefficient a below its floor");
  if (pb.coeffs.b && min_of(*pb.coeffs.b) < 0.0)
    throw UsageFault("advance_parabolic: coefficient b negative");
  if (pb.coeffs.c && min_of(*pb.coeffs.c) < 0.0)
    throw UsageFault("advance_parabolic: coefficient c negative");

  const ParabolicOperator op(pb.coeffs, pb.u0.front().grid());
  double dt_max = policy.dt > 0.0 ? policy.dt : op.stable_dt(policy.c_cfl);
  dt_max = std::min(dt_max, pb.T);
  const long steps = static_cast<long>(std::ceil(pb.T / dt_max - 1e-12));
  const double dt = pb.T / steps;

  auto rhs = [&](const TorusVector& u, double, int) {
    TorusVector k = op.apply(u);
    if (!pb.f.empty()) axpy_vec(k, 1.0, pb.f);
    return k;
  };
  TorusVector u = pb.u0;
  double norm = max_abs_vec(u);
  for (long n = 0; n < steps; ++n) {
    u = rk4_step(u, n * dt, dt, rhs, axpy_vec);
    const double next = max_abs_vec(u);
    if (!std::isfinite(next) || (norm > 0.0 && next > 10.0 * norm && next > 1e-300))
      throw StabilityFault("advance_parabolic: norm grew from " + std::to_string(norm) + " to " +
                           std::to_string(next) + " at step " + std::to_string(n));
    norm = next;
  }
  return u;
}

namespace {

ExtendedField scaled_extension(const ScalarField3D& f, double s) {
  ExtendedField e = even_extend(f);
  e *= s;
  return e;
}

}  // namespace

VectorField3D2C solve_channel_parabolic(const VelocityProblem& pb, const DtPolicy& policy) {
  const Grid& g = pb.sigma.grid();
  ParabolicProblem tp;
  tp.coeffs.a = scaled_extension(pb.sigma, pb.mu);
  tp.coeffs.b = scaled_extension(pb.sigma, pb.mu + pb.lambda);
  tp.u0 = {even_extend(pb.V0[0]), even_extend(pb.V0[1])};
  tp.f = {even_extend(pb.f[0]), even_extend(pb.f[1])};
  tp.T = pb.T;
  TorusVector u = advance_parabolic(tp, policy);
  return VectorField3D2C(restrict_to_channel(u[0], g), restrict_to_channel(u[1], g));
}

ScalarField3D solve_channel_parabolic(const SigmaProblem& pb, const DtPolicy& policy) {
  const Grid& g = pb.sigma.grid();
  ParabolicProblem tp;
  tp.coeffs.c = scaled_extension(pb.sigma, pb.nu);
  tp.coeffs.e = pb.epsilon;
  tp.u0 = {even_extend(pb.S0)};
  tp.f = {even_extend(pb.g)};
  tp.T = pb.T;
  TorusVector u = advance_parabolic(tp, policy);
  return restrict_to_channel(u[0], g);
}

}  // namespace cpe
