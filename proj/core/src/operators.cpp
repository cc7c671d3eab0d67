#include "cpe/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpe/errors.hpp"
#include "cpe/spectral.hpp"
#include "modal.hpp"

namespace cpe {

namespace sp = spectral;
using detail::Modal;

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
ScalarField3D apply3(const ScalarField3D& f, const char* what, F&& op) {
  f.require_finite(what);
  return detail::from_modal(op(detail::to_modal(f)), f.grid());
}

template <class F>
ScalarField2D apply2(const ScalarField2D& f, const char* what, F&& op) {
  f.require_finite(what);
  return sp::inverse(op(sp::forward(f)), f.grid());
}

Modal map_spectrum(const Modal& m, sp::Spectrum3D (*op)(const sp::Spectrum3D&),
                   sp::Spectrum2D (*op2)(const sp::Spectrum2D&)) {
  Modal out{op(m.s), {}, {}};
  if (m.has_ramp()) {
    out.lo = op2(*m.lo);
    out.hi = op2(*m.hi);
  }
  return out;
}

void require_even(const ScalarField3D& f, const char* what) {
  if (f.parity() != ZParity::Even) throw UsageFault(std::string(what) + ": even field required");
}

}  // namespace

ScalarField3D ddx(const ScalarField3D& f) {
  return apply3(f, "ddx", [](const Modal& m) { return detail::ddx(m); });
}

ScalarField3D ddy(const ScalarField3D& f) {
  return apply3(f, "ddy", [](const Modal& m) { return detail::ddy(m); });
}

ScalarField3D ddz(const ScalarField3D& f) {
  return apply3(f, "ddz", [](const Modal& m) { return detail::ddz(m); });
}

ScalarField3D d2z(const ScalarField3D& f) {
  return apply3(f, "d2z", [](const Modal& m) { return detail::ddz(detail::ddz(m)); });
}

ScalarField3D laplacian_h(const ScalarField3D& f) {
  return apply3(f, "laplacian_h", [](const Modal& m) {
    return map_spectrum(m, &sp::laplacian_h, &sp::laplacian_h);
  });
}

ScalarField3D laplacian(const ScalarField3D& f) {
  return apply3(f, "laplacian", [](const Modal& m) {
    Modal out = map_spectrum(m, &sp::laplacian_h, &sp::laplacian_h);
    out.s += detail::ddz(detail::ddz(m)).s;
    return out;
  });
}

ScalarField2D ddx(const ScalarField2D& f) {
  return apply2(f, "ddx", [](const sp::Spectrum2D& s) { return sp::ddx(s); });
}

ScalarField2D ddy(const ScalarField2D& f) {
  return apply2(f, "ddy", [](const sp::Spectrum2D& s) { return sp::ddy(s); });
}

ScalarField2D laplacian_h(const ScalarField2D& f) {
  return apply2(f, "laplacian_h", [](const sp::Spectrum2D& s) { return sp::laplacian_h(s); });
}

ScalarField3D divergence_h(const VectorField3D2C& v) {
  v.require_finite("divergence_h");
  Modal a = detail::ddx(detail::to_modal(v[0]));
  Modal b = detail::ddy(detail::to_modal(v[1]));
  if (a.parity() != b.parity()) throw UsageFault("divergence_h: component parities differ");
  a.s += b.s;
  if (a.has_ramp()) {
    *a.lo += *b.lo;
    *a.hi += *b.hi;
  }
  return detail::from_modal(a, v.grid());
}

VectorField3D2C gradient_h(const ScalarField3D& f) {
  f.require_finite("gradient_h");
  Modal m = detail::to_modal(f);
  return VectorField3D2C(detail::from_modal(detail::ddx(m), f.grid()),
                         detail::from_modal(detail::ddy(m), f.grid()));
}

ScalarField2D vertical_average(const ScalarField3D& f) {
  f.require_finite("vertical_average");
  return sp::inverse(detail::z_average(detail::to_modal(f)), f.grid());
}

ScalarField3D fluctuation(const ScalarField3D& f) {
  require_even(f, "fluctuation");
  f.require_finite("fluctuation");
  return sp::inverse(sp::without_mean(sp::forward(f)), f.grid());
}

ScalarField3D vertical_cumulative_integral(const ScalarField3D& f) {
  require_even(f, "vertical_cumulative_integral");
  f.require_finite("vertical_cumulative_integral");
  const Grid& g = f.grid();
  const Dims& d = g.dims();
  sp::Spectrum3D a = sp::forward(f);
  Modal out{sp::Spectrum3D(d, ZParity::Odd), sp::Spectrum2D(d), sp::mean_plane(a)};
  for (int m = 1; m < d.nz; ++m) {
    const double s = 1.0 / (kPi * m);
    for (int j = 0; j < d.ny; ++j)
      for (int i = 0; i < d.nkx(); ++i) out.s.at(m, j, i) = s * a.at(m, j, i);
  }
  return detail::from_modal(out, g);
}

ScalarField3D multiply_dealiased(const ScalarField3D& f, const ScalarField3D& g) {
  require_same_grid(f.grid(), g.grid(), "multiply_dealiased");
  f.require_finite("multiply_dealiased");
  g.require_finite("multiply_dealiased");
  const Grid& grid = f.grid();
  const Dims fine = grid.padded();
  std::vector<double> a = detail::on_fine(detail::to_modal(f), fine);
  const std::vector<double> b = detail::on_fine(detail::to_modal(g), fine);
  for (std::size_t n = 0; n < a.size(); ++n) a[n] *= b[n];
  const ZParity parity = f.parity() * g.parity();
  return detail::from_modal(detail::from_fine_modal(a, fine, parity, grid.dims()), grid);
}

ScalarField3D multiply_dealiased(const ScalarField3D& f, const ScalarField2D& g) {
  require_same_grid(f.grid(), g.grid(), "multiply_dealiased");
  f.require_finite("multiply_dealiased");
  g.require_finite("multiply_dealiased");
  const Grid& grid = f.grid();
  const Dims fine = grid.padded();
  std::vector<double> a = detail::on_fine(detail::to_modal(f), fine);
  const std::vector<double> b = sp::to_fine(sp::forward(g), fine);
  const std::size_t plane = fine.plane();
  for (std::size_t n = 0; n < a.size(); ++n) a[n] *= b[n % plane];
  return detail::from_modal(detail::from_fine_modal(a, fine, f.parity(), grid.dims()), grid);
}

ScalarField2D multiply_dealiased(const ScalarField2D& f, const ScalarField2D& g) {
  require_same_grid(f.grid(), g.grid(), "multiply_dealiased");
  f.require_finite("multiply_dealiased");
  g.require_finite("multiply_dealiased");
  const Grid& grid = f.grid();
  const Dims fine = grid.padded();
  std::vector<double> a = sp::to_fine(sp::forward(f), fine);
  const std::vector<double> b = sp::to_fine(sp::forward(g), fine);
  for (std::size_t n = 0; n < a.size(); ++n) a[n] *= b[n];
  return sp::inverse(sp::from_fine(a, fine, grid.dims()), grid);
}

ScalarField3D multiply_dealiased(double c, const ScalarField3D& f) {
  f.require_finite("multiply_dealiased");
  ScalarField3D out = f;
  out *= c;
  return out;
}

ScalarField2D multiply_dealiased(double c, const ScalarField2D& f) {
  f.require_finite("multiply_dealiased");
  ScalarField2D out = f;
  out *= c;
  return out;
}

ScalarField3D project(const ScalarField3D& f) {
  return apply3(f, "project", [](const Modal& m) { return m; });
}

ScalarField2D project(const ScalarField2D& f) {
  return apply2(f, "project", [](const sp::Spectrum2D& s) { return s; });
}

double neumann_defect(const ScalarField3D& f) { return ddz(f).max_abs_at_walls(); }

bool is_neumann_compatible(const ScalarField3D& f, double rel_tol) {
  if (f.parity() != ZParity::Even) return false;
  const Grid& g = f.grid();
  const int nz = g.nz();
  const double h = 1.0 / nz;
  double wall = 0.0, scale = 0.0;
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i) {
      auto at = [&](int k) { return f.at(i, j, k); };
      const double d0 = (-25 * at(0) + 48 * at(1) - 36 * at(2) + 16 * at(3) - 3 * at(4)) / (12 * h);
      const double d1 =
          (25 * at(nz) - 48 * at(nz - 1) + 36 * at(nz - 2) - 16 * at(nz - 3) + 3 * at(nz - 4)) /
          (12 * h);
      wall = std::max({wall, std::abs(d0), std::abs(d1)});
      for (int k = 1; k < nz; ++k)
        scale = std::max(scale, std::abs(at(k + 1) - at(k - 1)) / (2 * h));
    }
  if (scale == 0.0) return wall <= 1e-12;
  return wall <= rel_tol * scale;
}

}  // namespace cpe
