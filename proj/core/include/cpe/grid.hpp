#pragma once

#include <cstddef>
#include <numbers>

namespace cpe {

/// Raw array extents: nx x ny horizontal points and nz intervals in z
/// (nz + 1 levels including both walls).
struct Dims {
  int nx = 0;
  int ny = 0;
  int nz = 0;

  std::size_t plane() const noexcept { return static_cast<std::size_t>(nx) * ny; }
  std::size_t levels() const noexcept { return static_cast<std::size_t>(nz) + 1; }
  std::size_t nodal_size() const noexcept { return plane() * levels(); }
  int nkx() const noexcept { return nx / 2 + 1; }
  std::size_t spectral_plane() const noexcept { return static_cast<std::size_t>(ny) * nkx(); }
  std::size_t spectral_size() const noexcept { return spectral_plane() * levels(); }

  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class DealiasRule { ThreeHalves };

/// Collocation grid on T^2 x [0,1]: Fourier in x and y (period 2 pi) and a
/// cosine series on the endpoint-inclusive nodes z_k = k / nz.
class Grid {
 public:
  Grid(int nx, int ny, int nz);

  int nx() const noexcept { return dims_.nx; }
  int ny() const noexcept { return dims_.ny; }
  int nz() const noexcept { return dims_.nz; }
  const Dims& dims() const noexcept { return dims_; }
  /// Extents of the 3/2 zero-padded grid used for products.
  Dims padded() const noexcept;
  DealiasRule dealias_rule() const noexcept { return DealiasRule::ThreeHalves; }

  std::size_t plane_size() const noexcept { return dims_.plane(); }
  std::size_t levels() const noexcept { return dims_.levels(); }
  std::size_t size3() const noexcept { return dims_.nodal_size(); }
  std::size_t size2() const noexcept { return dims_.plane(); }

  std::size_t index(int i, int j, int k) const noexcept {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(dims_.nx) * (j + static_cast<std::size_t>(dims_.ny) * k);
  }
  std::size_t index2(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(dims_.nx) * j;
  }

  double x(int i) const noexcept { return 2.0 * std::numbers::pi * i / dims_.nx; }
  double y(int j) const noexcept { return 2.0 * std::numbers::pi * j / dims_.ny; }
  double z(int k) const noexcept { return static_cast<double>(k) / dims_.nz; }

  /// Wavenumber of r2c column i (0..nx/2).
  double kx(int i) const noexcept { return i; }
  /// Signed wavenumber of spectral row j.
  double ky(int j) const noexcept { return j <= dims_.ny / 2 ? j : j - dims_.ny; }
  /// Vertical wavenumber of cosine/sine mode m.
  double kz(int m) const noexcept { return std::numbers::pi * m; }

  /// Horizontal torus area (2 pi)^2 and channel volume (2 pi)^2 * 1.
  static constexpr double area() noexcept { return 4.0 * std::numbers::pi * std::numbers::pi; }
  static constexpr double volume() noexcept { return area(); }

  friend bool operator==(const Grid& a, const Grid& b) noexcept { return a.dims_ == b.dims_; }

 private:
  Dims dims_;
};

}  // namespace cpe
