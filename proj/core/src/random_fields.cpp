#include "cpe/random_fields.hpp"

#include <algorithm>

#include "cpe/errors.hpp"
#include "cpe/spectral.hpp"

namespace cpe {

namespace sp = spectral;

namespace {

// Fills one coefficient plane with Hermitian-consistent normal values.
void fill_plane(sp::cplx* plane, const Dims& d, int band, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const int nkx = d.nkx();
  const int kmax = std::min({band, d.nx / 2 - 1, d.ny / 2 - 1});
  for (int ky = -kmax; ky <= kmax; ++ky) {
    const int j = ky >= 0 ? ky : d.ny + ky;
    for (int kx = 0; kx <= kmax; ++kx) {
      const double re = normal(rng);
      const double im = normal(rng);
      plane[static_cast<std::size_t>(j) * nkx + kx] = {re, im};
    }
  }
  // kx = 0 column: c(-ky) = conj(c(ky)), c(0) real.
  plane[0] = plane[0].real();
  for (int ky = 1; ky <= kmax; ++ky) {
    const sp::cplx c = plane[static_cast<std::size_t>(ky) * nkx];
    plane[static_cast<std::size_t>(d.ny - ky) * nkx] = std::conj(c);
  }
}

template <class F>
void normalize(F& f) {
  const double m = f.max_abs();
  if (m > 0.0) f *= 1.0 / m;
}

}  // namespace

ScalarField3D random_channel_field(const Grid& grid, int band_limit, Rng& rng) {
  if (band_limit < 0) throw UsageFault("random_channel_field: negative band limit");
  const Dims& d = grid.dims();
  sp::Spectrum3D s(d, ZParity::Even);
  const int mmax = std::min(band_limit, d.nz - 1);
  for (int m = 0; m <= mmax; ++m) fill_plane(&s.at(m, 0, 0), d, band_limit, rng);
  ScalarField3D f = sp::inverse(s, grid);
  normalize(f);
  return f;
}

ScalarField2D random_plane_field(const Grid& grid, int band_limit, Rng& rng) {
  if (band_limit < 0) throw UsageFault("random_plane_field: negative band limit");
  sp::Spectrum2D s(grid.dims());
  fill_plane(s.coeffs().data(), grid.dims(), band_limit, rng);
  ScalarField2D f = sp::inverse(s, grid);
  normalize(f);
  return f;
}

}  // namespace cpe
