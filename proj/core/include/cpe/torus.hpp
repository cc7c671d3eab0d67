#pragma once

#include <complex>
#include <vector>

#include "cpe/field.hpp"

namespace cpe {

/// Fully periodic grid on T^2 x [0, 2): the even extension of a channel grid
/// with nz intervals has 2 nz points in z at z_k = k / nz.
class TorusGrid {
 public:
  TorusGrid(int nx, int ny, int nzt);
  static TorusGrid extension_of(const Grid& g) { return TorusGrid(g.nx(), g.ny(), 2 * g.nz()); }

  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  int nzt() const noexcept { return nzt_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(nx_) * ny_ * nzt_; }
  std::size_t index(int i, int j, int k) const noexcept {
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(nx_) * (j + static_cast<std::size_t>(ny_) * k);
  }
  /// Extents of the 3/2 padded companion grid.
  TorusGrid padded() const noexcept { return TorusGrid(3 * nx_ / 2, 3 * ny_ / 2, 3 * nzt_ / 2); }

  friend bool operator==(const TorusGrid&, const TorusGrid&) = default;

 private:
  int nx_, ny_, nzt_;
};

/// Field on the doubled, z-periodic domain built by reflecting a channel
/// field across z = 0 (equivalently z = 1).
class ExtendedField {
 public:
  explicit ExtendedField(const TorusGrid& grid) : grid_(grid), data_(grid.size(), 0.0) {}
  ExtendedField(const TorusGrid& grid, std::vector<double> values);

  const TorusGrid& grid() const noexcept { return grid_; }
  double& at(int i, int j, int k) noexcept { return data_[grid_.index(i, j, k)]; }
  double at(int i, int j, int k) const noexcept { return data_[grid_.index(i, j, k)]; }
  std::vector<double>& raw() noexcept { return data_; }
  const std::vector<double>& raw() const noexcept { return data_; }

  /// max |u(z) - u(-z)| over the grid.
  double symmetry_defect() const;
  double max_abs() const;
  double l2_norm() const;

  ExtendedField& operator+=(const ExtendedField& o);
  ExtendedField& operator*=(double s);
  ExtendedField& axpy(double a, const ExtendedField& o);

 private:
  TorusGrid grid_;
  std::vector<double> data_;
};

enum class NeumannCheck { Heuristic, Skip };

/// Even extension of an even-tagged channel field. With the heuristic check,
/// data whose wall derivative is visibly nonzero is rejected (UsageFault).
ExtendedField even_extend(const ScalarField3D& f, NeumannCheck check = NeumannCheck::Heuristic);

/// Channel part of an extended field. Throws SymmetryFault when the even
/// symmetry is broken by more than `tol` (relative to max(1, max |u|)).
ScalarField3D restrict_to_channel(const ExtendedField& u, const Grid& grid, double tol = 1e-10);

namespace torus {

using cplx = std::complex<double>;

/// Half spectrum on a torus grid, index (k, j, i) with i in 0..nx/2.
struct Spectrum {
  TorusGrid grid;
  std::vector<cplx> c;

  explicit Spectrum(const TorusGrid& g)
      : grid(g), c(static_cast<std::size_t>(g.nzt()) * g.ny() * (g.nx() / 2 + 1)) {}
  int nkx() const noexcept { return grid.nx() / 2 + 1; }
  std::size_t index(int k, int j, int i) const noexcept {
    return (static_cast<std::size_t>(k) * grid.ny() + j) * nkx() + i;
  }
};

Spectrum forward(const ExtendedField& u);
ExtendedField inverse(const Spectrum& s);
Spectrum pad(const Spectrum& s, const TorusGrid& fine);
Spectrum truncate(const Spectrum& s, const TorusGrid& coarse);

double kx(const TorusGrid& g, int i);
double ky(const TorusGrid& g, int j);
double kz(const TorusGrid& g, int k);

}  // namespace torus

}  // namespace cpe
