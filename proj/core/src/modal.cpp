#include "modal.hpp"

#include <numbers>

#include "cpe/errors.hpp"

namespace cpe::detail {

namespace sp = spectral;

namespace {

constexpr double kPi = std::numbers::pi;

std::span<const double> level(std::span<const double> nodal, const Dims& d, int k) {
  return nodal.subspan(d.plane() * k, d.plane());
}

}  // namespace

Modal to_modal(std::span<const double> nodal, const Dims& d, ZParity parity) {
  if (parity == ZParity::Even) return Modal{sp::forward(nodal, d, parity), {}, {}};
  const std::size_t plane = d.plane();
  auto lo = level(nodal, d, 0);
  auto hi = level(nodal, d, d.nz);
  std::vector<double> g(nodal.begin(), nodal.end());
  for (int k = 0; k <= d.nz; ++k) {
    const double z = static_cast<double>(k) / d.nz;
    double* row = g.data() + plane * k;
    for (std::size_t n = 0; n < plane; ++n) row[n] -= lo[n] * (1.0 - z) + hi[n] * z;
  }
  return Modal{sp::forward(g, d, parity), sp::forward(lo, d), sp::forward(hi, d)};
}

Modal to_modal(const ScalarField3D& f) {
  return to_modal(f.values(), f.grid().dims(), f.parity());
}

void from_modal(const Modal& m, std::span<double> nodal) {
  const Dims& d = m.dims();
  sp::inverse(m.s, nodal);
  if (!m.has_ramp()) return;
  const std::size_t plane = d.plane();
  std::vector<double> lo(plane), hi(plane);
  sp::inverse(*m.lo, lo);
  sp::inverse(*m.hi, hi);
  for (int k = 0; k <= d.nz; ++k) {
    const double z = static_cast<double>(k) / d.nz;
    double* row = nodal.data() + plane * k;
    for (std::size_t n = 0; n < plane; ++n) row[n] += lo[n] * (1.0 - z) + hi[n] * z;
  }
}

ScalarField3D from_modal(const Modal& m, const Grid& grid) {
  if (!(m.dims() == grid.dims())) throw UsageFault("from_modal: extents differ");
  ScalarField3D f(grid, m.parity());
  from_modal(m, f.values());
  return f;
}

std::vector<double> on_fine(const Modal& m, const Dims& fine) {
  Modal padded{sp::pad(m.s, fine), {}, {}};
  if (m.has_ramp()) {
    padded.lo = sp::pad(*m.lo, fine);
    padded.hi = sp::pad(*m.hi, fine);
  }
  std::vector<double> out(fine.nodal_size());
  from_modal(padded, out);
  return out;
}

Modal from_fine_modal(std::span<const double> nodal, const Dims& fine, ZParity parity,
                      const Dims& coarse) {
  Modal m = to_modal(nodal, fine, parity);
  Modal out{sp::truncate(m.s, coarse), {}, {}};
  if (m.has_ramp()) {
    out.lo = sp::truncate(*m.lo, coarse);
    out.hi = sp::truncate(*m.hi, coarse);
  }
  return out;
}

Modal ddx(const Modal& m) {
  Modal out{sp::ddx(m.s), {}, {}};
  if (m.has_ramp()) {
    out.lo = sp::ddx(*m.lo);
    out.hi = sp::ddx(*m.hi);
  }
  return out;
}

Modal ddy(const Modal& m) {
  Modal out{sp::ddy(m.s), {}, {}};
  if (m.has_ramp()) {
    out.lo = sp::ddy(*m.lo);
    out.hi = sp::ddy(*m.hi);
  }
  return out;
}

Modal ddz(const Modal& m) {
  Modal out{sp::ddz(m.s), {}, {}};
  if (m.has_ramp()) {
    sp::add_to_mean(out.s, *m.hi, 1.0);
    sp::add_to_mean(out.s, *m.lo, -1.0);
  }
  return out;
}

sp::Spectrum2D z_average(const Modal& m) {
  const Dims& d = m.dims();
  if (m.parity() == ZParity::Even) return sp::mean_plane(m.s);
  sp::Spectrum2D out(d);
  for (int k = 1; k < d.nz; k += 2) {
    const double w = 2.0 / (kPi * k);
    const sp::cplx* row = &m.s.at(k, 0, 0);
    for (std::size_t n = 0; n < out.coeffs().size(); ++n) out.coeffs()[n] += w * row[n];
  }
  if (m.has_ramp()) {
    out.axpy(0.5, *m.lo);
    out.axpy(0.5, *m.hi);
  }
  return out;
}

}  // namespace cpe::detail
