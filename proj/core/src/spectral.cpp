#include "cpe/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpe/errors.hpp"
#include "fft_plans.hpp"

namespace cpe::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

void check_match(const Dims& a, const Dims& b, const char* what) {
  if (!(a == b)) throw UsageFault(std::string("spectrum extents differ in ") + what);
}

void zero_nyquist_plane(cplx* plane, const Dims& d) {
  const int nkx = d.nkx();
  for (int j = 0; j < d.ny; ++j) plane[static_cast<std::size_t>(j) * nkx + d.nx / 2] = 0.0;
  std::fill_n(plane + static_cast<std::size_t>(d.ny / 2) * nkx, nkx, cplx{});
}

// z transform of nodal data in place: nodal rows in, coefficient rows out.
void z_forward(double* buf, const Dims& d, ZParity parity) {
  const std::size_t plane = d.plane();
  const int nz = d.nz;
  if (parity == ZParity::Even) {
    fftw_execute_r2r(detail::plan_dct1_columns(nz + 1, static_cast<int>(plane)), buf, buf);
    const double s_end = 1.0 / (2.0 * nz);
    const double s_mid = 1.0 / nz;
    for (std::size_t n = 0; n < plane; ++n) buf[n] *= s_end;
    for (std::size_t n = plane * nz; n < plane * (nz + 1); ++n) buf[n] *= s_end;
    for (std::size_t n = plane; n < plane * nz; ++n) buf[n] *= s_mid;
  } else {
    double* interior = buf + plane;
    fftw_execute_r2r(detail::plan_dst1_columns(nz - 1, static_cast<int>(plane)), interior,
                     interior);
    const double s = 1.0 / nz;
    for (std::size_t n = plane; n < plane * nz; ++n) buf[n] *= s;
    std::fill_n(buf, plane, 0.0);
    std::fill_n(buf + plane * nz, plane, 0.0);
  }
}

void z_inverse(double* buf, const Dims& d, ZParity parity) {
  const std::size_t plane = d.plane();
  const int nz = d.nz;
  if (parity == ZParity::Even) {
    for (std::size_t n = plane; n < plane * nz; ++n) buf[n] *= 0.5;
    fftw_execute_r2r(detail::plan_dct1_columns(nz + 1, static_cast<int>(plane)), buf, buf);
  } else {
    double* interior = buf + plane;
    fftw_execute_r2r(detail::plan_dst1_columns(nz - 1, static_cast<int>(plane)), interior,
                     interior);
    for (std::size_t n = plane; n < plane * nz; ++n) buf[n] *= 0.5;
    std::fill_n(buf, plane, 0.0);
    std::fill_n(buf + plane * nz, plane, 0.0);
  }
}

// Fine row index of coarse row j, or -1 if the mode is dropped by padding.
int map_ky(int j, const Dims& from, const Dims& to) {
  const int ky = static_cast<int>(ky_of(from, j));
  const int lim = std::min(from.ny, to.ny) / 2;
  if (ky >= lim || ky <= -lim) return -1;
  return ky >= 0 ? ky : to.ny + ky;
}

Spectrum3D resample(const Spectrum3D& s, const Dims& to) {
  const Dims& from = s.dims();
  Spectrum3D out(to, s.parity());
  const int mlim = std::min(from.nz, to.nz);
  const int ilim = std::min(from.nx, to.nx) / 2;
  for (int m = 0; m < mlim; ++m)
    for (int j = 0; j < from.ny; ++j) {
      const int jt = map_ky(j, from, to);
      if (jt < 0) continue;
      for (int i = 0; i < ilim; ++i) out.at(m, jt, i) = s.at(m, j, i);
    }
  return out;
}

Spectrum2D resample(const Spectrum2D& s, const Dims& to) {
  const Dims& from = s.dims();
  Spectrum2D out(to);
  const int ilim = std::min(from.nx, to.nx) / 2;
  for (int j = 0; j < from.ny; ++j) {
    const int jt = map_ky(j, from, to);
    if (jt < 0) continue;
    for (int i = 0; i < ilim; ++i) out.at(jt, i) = s.at(j, i);
  }
  return out;
}

template <class F>
Spectrum3D map_modes(const Spectrum3D& s, ZParity parity, F&& f) {
  const Dims& d = s.dims();
  Spectrum3D out(d, parity);
  for (int m = 0; m <= d.nz; ++m)
    for (int j = 0; j < d.ny; ++j)
      for (int i = 0; i < d.nkx(); ++i)
        out.at(m, j, i) = f(m, ky_of(d, j), kx_of(d, i)) * s.at(m, j, i);
  return out;
}

template <class F>
Spectrum2D map_modes(const Spectrum2D& s, F&& f) {
  const Dims& d = s.dims();
  Spectrum2D out(d);
  for (int j = 0; j < d.ny; ++j)
    for (int i = 0; i < d.nkx(); ++i) out.at(j, i) = f(ky_of(d, j), kx_of(d, i)) * s.at(j, i);
  return out;
}

}  // namespace

Spectrum3D& Spectrum3D::operator+=(const Spectrum3D& o) {
  check_match(dims_, o.dims_, "+=");
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}
Spectrum3D& Spectrum3D::operator-=(const Spectrum3D& o) {
  check_match(dims_, o.dims_, "-=");
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}
Spectrum3D& Spectrum3D::operator*=(double s) {
  for (auto& c : c_) c *= s;
  return *this;
}
Spectrum3D& Spectrum3D::axpy(double a, const Spectrum3D& o) {
  check_match(dims_, o.dims_, "axpy");
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += a * o.c_[n];
  return *this;
}

Spectrum2D& Spectrum2D::operator+=(const Spectrum2D& o) {
  check_match(dims_, o.dims_, "+=");
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}
Spectrum2D& Spectrum2D::operator-=(const Spectrum2D& o) {
  check_match(dims_, o.dims_, "-=");
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}
Spectrum2D& Spectrum2D::operator*=(double s) {
  for (auto& c : c_) c *= s;
  return *this;
}
Spectrum2D& Spectrum2D::axpy(double a, const Spectrum2D& o) {
  check_match(dims_, o.dims_, "axpy");
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += a * o.c_[n];
  return *this;
}

Spectrum3D forward(std::span<const double> nodal, const Dims& d, ZParity parity) {
  if (nodal.size() != d.nodal_size()) throw UsageFault("forward: nodal size mismatch");
  auto& buf = detail::real_scratch(0);
  buf.assign(nodal.begin(), nodal.end());
  z_forward(buf.data(), d, parity);
  Spectrum3D s(d, parity);
  fftw_execute_dft_r2c(detail::plan_r2c_planes(d.nx, d.ny, d.nz + 1), buf.data(),
                       detail::as_fftw(s.coeffs().data()));
  const double scale = 1.0 / static_cast<double>(d.plane());
  for (auto& c : s.coeffs()) c *= scale;
  for (int m = 0; m <= d.nz; ++m) zero_nyquist_plane(&s.at(m, 0, 0), d);
  std::fill_n(&s.at(d.nz, 0, 0), d.spectral_plane(), cplx{});
  return s;
}

void inverse(const Spectrum3D& s, std::span<double> nodal) {
  const Dims& d = s.dims();
  if (nodal.size() != d.nodal_size()) throw UsageFault("inverse: nodal size mismatch");
  auto& cbuf = detail::complex_scratch(0);
  cbuf.assign(s.coeffs().begin(), s.coeffs().end());
  fftw_execute_dft_c2r(detail::plan_c2r_planes(d.nx, d.ny, d.nz + 1), detail::as_fftw(cbuf.data()),
                       nodal.data());
  z_inverse(nodal.data(), d, s.parity());
}

Spectrum2D forward(std::span<const double> nodal, const Dims& d) {
  if (nodal.size() != d.plane()) throw UsageFault("forward: plane size mismatch");
  auto& buf = detail::real_scratch(0);
  buf.assign(nodal.begin(), nodal.end());
  Spectrum2D s(d);
  fftw_execute_dft_r2c(detail::plan_r2c_planes(d.nx, d.ny, 1), buf.data(),
                       detail::as_fftw(s.coeffs().data()));
  const double scale = 1.0 / static_cast<double>(d.plane());
  for (auto& c : s.coeffs()) c *= scale;
  zero_nyquist_plane(s.coeffs().data(), d);
  return s;
}

void inverse(const Spectrum2D& s, std::span<double> nodal) {
  const Dims& d = s.dims();
  if (nodal.size() != d.plane()) throw UsageFault("inverse: plane size mismatch");
  auto& cbuf = detail::complex_scratch(0);
  cbuf.assign(s.coeffs().begin(), s.coeffs().end());
  fftw_execute_dft_c2r(detail::plan_c2r_planes(d.nx, d.ny, 1), detail::as_fftw(cbuf.data()),
                       nodal.data());
}

Spectrum3D forward(const ScalarField3D& f) {
  if (f.parity() == ZParity::Odd) {
    const double wall = f.max_abs_at_walls();
    if (wall > 1e-9 * std::max(1.0, f.max_abs()))
      throw UsageFault("forward: odd field does not vanish at the walls");
  }
  return forward(f.values(), f.grid().dims(), f.parity());
}

ScalarField3D inverse(const Spectrum3D& s, const Grid& grid) {
  check_match(s.dims(), grid.dims(), "inverse");
  ScalarField3D f(grid, s.parity());
  inverse(s, f.values());
  return f;
}

Spectrum2D forward(const ScalarField2D& f) { return forward(f.values(), f.grid().dims()); }

ScalarField2D inverse(const Spectrum2D& s, const Grid& grid) {
  check_match(s.dims(), grid.dims(), "inverse");
  ScalarField2D f(grid);
  inverse(s, f.values());
  return f;
}

Spectrum3D pad(const Spectrum3D& coarse, const Dims& fine) { return resample(coarse, fine); }
Spectrum3D truncate(const Spectrum3D& fine, const Dims& coarse) { return resample(fine, coarse); }
Spectrum2D pad(const Spectrum2D& coarse, const Dims& fine) { return resample(coarse, fine); }
Spectrum2D truncate(const Spectrum2D& fine, const Dims& coarse) { return resample(fine, coarse); }

std::vector<double> to_fine(const Spectrum3D& coarse, const Dims& fine) {
  std::vector<double> out(fine.nodal_size());
  inverse(pad(coarse, fine), out);
  return out;
}

std::vector<double> to_fine(const Spectrum2D& coarse, const Dims& fine) {
  std::vector<double> out(fine.plane());
  inverse(pad(coarse, fine), out);
  return out;
}

Spectrum3D from_fine(std::span<const double> nodal, const Dims& fine, ZParity parity,
                     const Dims& coarse) {
  return truncate(forward(nodal, fine, parity), coarse);
}

Spectrum2D from_fine(std::span<const double> nodal, const Dims& fine, const Dims& coarse) {
  return truncate(forward(nodal, fine), coarse);
}

Spectrum3D ddx(const Spectrum3D& s) {
  return map_modes(s, s.parity(), [](int, double, double kx) { return cplx(0.0, kx); });
}

Spectrum3D ddy(const Spectrum3D& s) {
  return map_modes(s, s.parity(), [](int, double ky, double) { return cplx(0.0, ky); });
}

Spectrum3D ddz(const Spectrum3D& s) {
  const bool even = s.parity() == ZParity::Even;
  return map_modes(s, even ? ZParity::Odd : ZParity::Even, [even](int m, double, double) {
    return cplx(even ? -kPi * m : kPi * m, 0.0);
  });
}

Spectrum3D d2z(const Spectrum3D& s) {
  return map_modes(s, s.parity(),
                   [](int m, double, double) { return cplx(-kPi * kPi * m * m, 0.0); });
}

Spectrum3D laplacian_h(const Spectrum3D& s) {
  return map_modes(s, s.parity(),
                   [](int, double ky, double kx) { return cplx(-(kx * kx + ky * ky), 0.0); });
}

Spectrum3D laplacian(const Spectrum3D& s) {
  return map_modes(s, s.parity(), [](int m, double ky, double kx) {
    return cplx(-(kx * kx + ky * ky + kPi * kPi * m * m), 0.0);
  });
}

Spectrum2D ddx(const Spectrum2D& s) {
  return map_modes(s, [](double, double kx) { return cplx(0.0, kx); });
}

Spectrum2D ddy(const Spectrum2D& s) {
  return map_modes(s, [](double ky, double) { return cplx(0.0, ky); });
}

Spectrum2D laplacian_h(const Spectrum2D& s) {
  return map_modes(s, [](double ky, double kx) { return cplx(-(kx * kx + ky * ky), 0.0); });
}

Spectrum2D mean_plane(const Spectrum3D& s) {
  if (s.parity() != ZParity::Even) throw UsageFault("mean_plane: odd spectrum");
  Spectrum2D out(s.dims());
  std::copy_n(&s.at(0, 0, 0), s.dims().spectral_plane(), out.coeffs().begin());
  return out;
}

Spectrum3D without_mean(const Spectrum3D& s) {
  if (s.parity() != ZParity::Even) throw UsageFault("without_mean: odd spectrum");
  Spectrum3D out = s;
  std::fill_n(&out.at(0, 0, 0), s.dims().spectral_plane(), cplx{});
  return out;
}

Spectrum3D lift(const Spectrum2D& s, const Dims& dims) {
  if (s.dims().nx != dims.nx || s.dims().ny != dims.ny) throw UsageFault("lift: extents differ");
  Spectrum3D out(dims, ZParity::Even);
  std::copy(s.coeffs().begin(), s.coeffs().end(), &out.at(0, 0, 0));
  return out;
}

void add_to_mean(Spectrum3D& s, const Spectrum2D& plane, double scale) {
  if (s.parity() != ZParity::Even) throw UsageFault("add_to_mean: odd spectrum");
  if (s.dims().nx != plane.dims().nx || s.dims().ny != plane.dims().ny)
    throw UsageFault("add_to_mean: extents differ");
  cplx* dst = &s.at(0, 0, 0);
  for (std::size_t n = 0; n < plane.coeffs().size(); ++n) dst[n] += scale * plane.coeffs()[n];
}

}  // namespace cpe::spectral
