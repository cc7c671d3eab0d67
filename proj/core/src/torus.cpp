#include "cpe/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpe/errors.hpp"
#include "cpe/operators.hpp"
#include "fft_plans.hpp"

namespace cpe {

TorusGrid::TorusGrid(int nx, int ny, int nzt) : nx_(nx), ny_(ny), nzt_(nzt) {
  if (nx < 2 || ny < 2 || nzt < 2 || nx % 2 || ny % 2 || nzt % 2)
    throw UsageFault("TorusGrid: extents must be even and at least 2");
}

ExtendedField::ExtendedField(const TorusGrid& grid, std::vector<double> values)
    : grid_(grid), data_(std::move(values)) {
  if (data_.size() != grid_.size()) throw UsageFault("ExtendedField: value count mismatch");
}

double ExtendedField::symmetry_defect() const {
  const int nzt = grid_.nzt();
  double d = 0.0;
  for (int k = 1; k < nzt / 2; ++k)
    for (int j = 0; j < grid_.ny(); ++j)
      for (int i = 0; i < grid_.nx(); ++i) d = std::max(d, std::abs(at(i, j, k) - at(i, j, nzt - k)));
  return d;
}

double ExtendedField::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double ExtendedField::l2_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  const double cell = 4.0 * std::numbers::pi * std::numbers::pi * 2.0 / data_.size();
  return std::sqrt(s * cell);
}

ExtendedField& ExtendedField::operator+=(const ExtendedField& o) {
  if (!(grid_ == o.grid_)) throw UsageFault("ExtendedField: grid mismatch");
  for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += o.data_[n];
  return *this;
}

ExtendedField& ExtendedField::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

ExtendedField& ExtendedField::axpy(double a, const ExtendedField& o) {
  if (!(grid_ == o.grid_)) throw UsageFault("ExtendedField: grid mismatch");
  for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += a * o.data_[n];
  return *this;
}

ExtendedField even_extend(const ScalarField3D& f, NeumannCheck check) {
  if (f.parity() != ZParity::Even) throw UsageFault("even_extend: even field required");
  f.require_finite("even_extend");
  if (check == NeumannCheck::Heuristic && !is_neumann_compatible(f))
    throw UsageFault("even_extend: input is not Neumann-compatible");
  const Grid& g = f.grid();
  const int nz = g.nz();
  ExtendedField u(TorusGrid::extension_of(g));
  const std::size_t plane = g.plane_size();
  for (int k = 0; k < 2 * nz; ++k) {
    const int src = k <= nz ? k : 2 * nz - k;
    std::copy_n(f.raw().begin() + plane * src, plane, u.raw().begin() + plane * k);
  }
  return u;
}

ScalarField3D restrict_to_channel(const ExtendedField& u, const Grid& grid, double tol) {
  if (!(u.grid() == TorusGrid::extension_of(grid)))
    throw UsageFault("restrict_to_channel: grid mismatch");
  const double defect = u.symmetry_defect();
  if (defect > tol * std::max(1.0, u.max_abs()))
    throw SymmetryFault("even symmetry broken: defect " + std::to_string(defect));
  ScalarField3D f(grid);
  std::copy_n(u.raw().begin(), f.size(), f.raw().begin());
  return f;
}

namespace torus {

double kx(const TorusGrid&, int i) { return i; }
double ky(const TorusGrid& g, int j) { return j <= g.ny() / 2 ? j : j - g.ny(); }
double kz(const TorusGrid& g, int k) {
  return std::numbers::pi * (k <= g.nzt() / 2 ? k : k - g.nzt());
}

Spectrum forward(const ExtendedField& u) {
  const TorusGrid& g = u.grid();
  Spectrum s(g);
  auto& buf = detail::real_scratch(1);
  buf.assign(u.raw().begin(), u.raw().end());
  fftw_execute_dft_r2c(detail::plan_r2c_3d(g.nzt(), g.ny(), g.nx()), buf.data(),
                       detail::as_fftw(s.c.data()));
  const double scale = 1.0 / static_cast<double>(g.size());
  for (auto& c : s.c) c *= scale;
  const int nkx = s.nkx();
  for (int k = 0; k < g.nzt(); ++k)
    for (int j = 0; j < g.ny(); ++j)
      for (int i = 0; i < nkx; ++i)
        if (i == g.nx() / 2 || j == g.ny() / 2 || k == g.nzt() / 2) s.c[s.index(k, j, i)] = 0.0;
  return s;
}

ExtendedField inverse(const Spectrum& s) {
  const TorusGrid& g = s.grid;
  ExtendedField u(g);
  auto& cbuf = detail::complex_scratch(1);
  cbuf.assign(s.c.begin(), s.c.end());
  fftw_execute_dft_c2r(detail::plan_c2r_3d(g.nzt(), g.ny(), g.nx()), detail::as_fftw(cbuf.data()),
                       u.raw().data());
  return u;
}

namespace {

int remap(int idx, int from_n, int to_n) {
  const int k = idx <= from_n / 2 ? idx : idx - from_n;
  const int lim = std::min(from_n, to_n) / 2;
  if (k >= lim || k <= -lim) return -1;
  return k >= 0 ? k : to_n + k;
}

Spectrum resample(const Spectrum& s, const TorusGrid& to) {
  const TorusGrid& from = s.grid;
  Spectrum out(to);
  const int ilim = std::min(from.nx(), to.nx()) / 2;
  for (int k = 0; k < from.nzt(); ++k) {
    const int kt = remap(k, from.nzt(), to.nzt());
    if (kt < 0) continue;
    for (int j = 0; j < from.ny(); ++j) {
      const int jt = remap(j, from.ny(), to.ny());
      if (jt < 0) continue;
      for (int i = 0; i < ilim; ++i) out.c[out.index(kt, jt, i)] = s.c[s.index(k, j, i)];
    }
  }
  return out;
}

}  // namespace

Spectrum pad(const Spectrum& s, const TorusGrid& fine) { return resample(s, fine); }
Spectrum truncate(const Spectrum& s, const TorusGrid& coarse) { return resample(s, coarse); }

}  // namespace torus

}  // namespace cpe
