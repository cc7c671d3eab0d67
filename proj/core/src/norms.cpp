#include "cpe/norms.hpp"

#include <cmath>

#include "cpe/errors.hpp"
#include "cpe/spectral.hpp"

namespace cpe {

namespace sp = spectral;

namespace {

void check_order(int k) {
  if (k < 0 || k > 4) throw UsageFault("sobolev_norm: order must be in 0..4");
}

// Weight of r2c column i: interior columns stand for a conjugate pair.
double column_multiplicity(const Dims& d, int i) { return (i == 0 || i == d.nx / 2) ? 1.0 : 2.0; }

}  // namespace

double derivative_weight(double X, double Y, double Z, int k) {
  double total = 0.0;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; a + b <= k; ++b)
      for (int c = 0; a + b + c <= k; ++c)
        total += std::pow(X, a) * std::pow(Y, b) * std::pow(Z, c);
  return total;
}

double sobolev_norm_sq(const ScalarField3D& f, int k) {
  check_order(k);
  f.require_finite("sobolev_norm");
  const sp::Spectrum3D s = sp::forward(f);
  const Dims& d = s.dims();
  const Grid& g = f.grid();
  double total = 0.0;
  for (int m = 0; m <= d.nz; ++m) {
    const double zf = m == 0 ? 1.0 : 0.5;
    const double Z = g.kz(m) * g.kz(m);
    for (int j = 0; j < d.ny; ++j) {
      const double Y = g.ky(j) * g.ky(j);
      for (int i = 0; i < d.nkx(); ++i) {
        const double c2 = std::norm(s.at(m, j, i));
        if (c2 == 0.0) continue;
        const double X = g.kx(i) * g.kx(i);
        total += column_multiplicity(d, i) * zf * derivative_weight(X, Y, Z, k) * c2;
      }
    }
  }
  return total * Grid::volume();
}

double sobolev_norm_sq(const ScalarField2D& f, int k) {
  check_order(k);
  f.require_finite("sobolev_norm");
  const sp::Spectrum2D s = sp::forward(f);
  const Dims& d = s.dims();
  const Grid& g = f.grid();
  double total = 0.0;
  for (int j = 0; j < d.ny; ++j) {
    const double Y = g.ky(j) * g.ky(j);
    for (int i = 0; i < d.nkx(); ++i) {
      const double c2 = std::norm(s.at(j, i));
      if (c2 == 0.0) continue;
      const double X = g.kx(i) * g.kx(i);
      total += column_multiplicity(d, i) * derivative_weight(X, Y, 0.0, k) * c2;
    }
  }
  return total * Grid::area();
}

double sobolev_norm_sq(const VectorField3D2C& v, int k) {
  return sobolev_norm_sq(v[0], k) + sobolev_norm_sq(v[1], k);
}

double sobolev_norm(const ScalarField3D& f, int k) { return std::sqrt(sobolev_norm_sq(f, k)); }
double sobolev_norm(const ScalarField2D& f, int k) { return std::sqrt(sobolev_norm_sq(f, k)); }
double sobolev_norm(const VectorField3D2C& v, int k) { return std::sqrt(sobolev_norm_sq(v, k)); }

double state_h3_norm(const State& s) {
  return std::sqrt(sobolev_norm_sq(s.v, 3) + sobolev_norm_sq(s.sigma, 3) +
                   sobolev_norm_sq(s.p, 3));
}

double difference_norm(const State& a, const State& b) {
  const State d = a - b;
  return std::sqrt(sobolev_norm_sq(d.v, 1) + sobolev_norm_sq(d.sigma, 0) +
                   sobolev_norm_sq(d.p, 1));
}

}  // namespace cpe
