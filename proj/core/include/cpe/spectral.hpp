#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cpe/field.hpp"
#include "cpe/grid.hpp"

/// Spectral representation of channel fields.
///
/// A 3D spectrum stores c[m][j][i] such that
///   f(x, y, z) = sum c * exp(i (kx x + ky y)) * cos(m pi z)   (even parity)
///   f(x, y, z) = sum c * exp(i (kx x + ky y)) * sin(m pi z)   (odd parity)
/// with the usual r2c half-spectrum in x. Coefficients are normalized so the
/// same numbers describe the function on any grid, which makes zero padding a
/// plain copy. Nyquist modes (kx = nx/2, ky = ny/2, m = nz) are zeroed by every
/// forward transform.
namespace cpe::spectral {

using cplx = std::complex<double>;

class Spectrum3D {
 public:
  Spectrum3D(const Dims& dims, ZParity parity)
      : dims_(dims), parity_(parity), c_(dims.spectral_size(), cplx{}) {}

  const Dims& dims() const noexcept { return dims_; }
  ZParity parity() const noexcept { return parity_; }
  void set_parity(ZParity p) noexcept { parity_ = p; }

  std::size_t index(int m, int j, int i) const noexcept {
    return (static_cast<std::size_t>(m) * dims_.ny + j) * dims_.nkx() + i;
  }
  cplx& at(int m, int j, int i) noexcept { return c_[index(m, j, i)]; }
  const cplx& at(int m, int j, int i) const noexcept { return c_[index(m, j, i)]; }
  std::vector<cplx>& coeffs() noexcept { return c_; }
  const std::vector<cplx>& coeffs() const noexcept { return c_; }

  Spectrum3D& operator+=(const Spectrum3D& o);
  Spectrum3D& operator-=(const Spectrum3D& o);
  Spectrum3D& operator*=(double s);
  Spectrum3D& axpy(double a, const Spectrum3D& o);

 private:
  Dims dims_;
  ZParity parity_;
  std::vector<cplx> c_;
};

/// Single horizontal plane of coefficients (ny x nkx).
class Spectrum2D {
 public:
  explicit Spectrum2D(const Dims& dims) : dims_(dims), c_(dims.spectral_plane(), cplx{}) {}

  const Dims& dims() const noexcept { return dims_; }
  std::size_t index(int j, int i) const noexcept {
    return static_cast<std::size_t>(j) * dims_.nkx() + i;
  }
  cplx& at(int j, int i) noexcept { return c_[index(j, i)]; }
  const cplx& at(int j, int i) const noexcept { return c_[index(j, i)]; }
  std::vector<cplx>& coeffs() noexcept { return c_; }
  const std::vector<cplx>& coeffs() const noexcept { return c_; }

  Spectrum2D& operator+=(const Spectrum2D& o);
  Spectrum2D& operator-=(const Spectrum2D& o);
  Spectrum2D& operator*=(double s);
  Spectrum2D& axpy(double a, const Spectrum2D& o);

 private:
  Dims dims_;
  std::vector<cplx> c_;
};

// Raw transforms on any extents (coarse or padded).
Spectrum3D forward(std::span<const double> nodal, const Dims& dims, ZParity parity);
void inverse(const Spectrum3D& s, std::span<double> nodal);
Spectrum2D forward(std::span<const double> nodal, const Dims& dims);
void inverse(const Spectrum2D& s, std::span<double> nodal);

// Field-level transforms.
Spectrum3D forward(const ScalarField3D& f);
ScalarField3D inverse(const Spectrum3D& s, const Grid& grid);
Spectrum2D forward(const ScalarField2D& f);
ScalarField2D inverse(const Spectrum2D& s, const Grid& grid);

// Zero padding and truncation between a grid and its 3/2 companion.
Spectrum3D pad(const Spectrum3D& coarse, const Dims& fine);
Spectrum3D truncate(const Spectrum3D& fine, const Dims& coarse);
Spectrum2D pad(const Spectrum2D& coarse, const Dims& fine);
Spectrum2D truncate(const Spectrum2D& fine, const Dims& coarse);

/// Nodal values of a coarse spectrum on the padded grid.
std::vector<double> to_fine(const Spectrum3D& coarse, const Dims& fine);
std::vector<double> to_fine(const Spectrum2D& coarse, const Dims& fine);
/// Forward transform on the padded grid followed by truncation to `coarse`.
Spectrum3D from_fine(std::span<const double> nodal, const Dims& fine, ZParity parity,
                     const Dims& coarse);
Spectrum2D from_fine(std::span<const double> nodal, const Dims& fine, const Dims& coarse);

// Spectral differentiation. ddz flips parity.
Spectrum3D ddx(const Spectrum3D& s);
Spectrum3D ddy(const Spectrum3D& s);
Spectrum3D ddz(const Spectrum3D& s);
Spectrum3D d2z(const Spectrum3D& s);
Spectrum3D laplacian_h(const Spectrum3D& s);
Spectrum3D laplacian(const Spectrum3D& s);
Spectrum2D ddx(const Spectrum2D& s);
Spectrum2D ddy(const Spectrum2D& s);
Spectrum2D laplacian_h(const Spectrum2D& s);

/// z-mean plane (m = 0) of an even spectrum.
Spectrum2D mean_plane(const Spectrum3D& s);
/// Even spectrum with the m = 0 plane removed.
Spectrum3D without_mean(const Spectrum3D& s);
/// Even spectrum whose only z mode is the given plane.
Spectrum3D lift(const Spectrum2D& s, const Dims& dims);
/// Adds a plane to the m = 0 mode of an even spectrum.
void add_to_mean(Spectrum3D& s, const Spectrum2D& plane, double scale = 1.0);

/// Horizontal wavenumbers of spectral indices on arbitrary extents.
inline double kx_of(const Dims&, int i) noexcept { return i; }
inline double ky_of(const Dims& d, int j) noexcept { return j <= d.ny / 2 ? j : j - d.ny; }

}  // namespace cpe::spectral
