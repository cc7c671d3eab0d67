#pragma once

#include <array>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "cpe/grid.hpp"

namespace cpe {

/// Vertical symmetry class of a channel field. Even fields are cosine series
/// (Neumann at the walls); odd fields are sine series and vanish at the walls.
enum class ZParity { Even, Odd };

constexpr ZParity operator*(ZParity a, ZParity b) noexcept {
  return a == b ? ZParity::Even : ZParity::Odd;
}

/// Nodal scalar field on the channel grid, x fastest, then y, then z.
class ScalarField3D {
 public:
  explicit ScalarField3D(const Grid& grid, ZParity parity = ZParity::Even);
  ScalarField3D(const Grid& grid, ZParity parity, std::vector<double> values);

  static ScalarField3D constant(const Grid& grid, double value);
  static ScalarField3D from_function(const Grid& grid,
                                     const std::function<double(double, double, double)>& f,
                                     ZParity parity = ZParity::Even);

  const Grid& grid() const noexcept { return grid_; }
  ZParity parity() const noexcept { return parity_; }
  void set_parity(ZParity parity) noexcept { parity_ = parity; }

  double& at(int i, int j, int k) noexcept { return data_[grid_.index(i, j, k)]; }
  double at(int i, int j, int k) const noexcept { return data_[grid_.index(i, j, k)]; }
  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }
  std::vector<double>& raw() noexcept { return data_; }
  const std::vector<double>& raw() const noexcept { return data_; }
  std::size_t size() const noexcept { return data_.size(); }

  double min() const;
  double max() const;
  double max_abs() const;
  /// Max |f| over the wall levels z = 0 and z = 1.
  double max_abs_at_walls() const;
  /// Throws NumericalFault naming `what` if any value is NaN or infinite.
  void require_finite(std::string_view what) const;

  ScalarField3D& operator+=(const ScalarField3D& o);
  ScalarField3D& operator-=(const ScalarField3D& o);
  ScalarField3D& operator*=(double s);
  /// this += a * o
  ScalarField3D& axpy(double a, const ScalarField3D& o);

 private:
  Grid grid_;
  ZParity parity_;
  std::vector<double> data_;
};

ScalarField3D operator+(ScalarField3D a, const ScalarField3D& b);
ScalarField3D operator-(ScalarField3D a, const ScalarField3D& b);
ScalarField3D operator*(double s, ScalarField3D a);

/// Nodal scalar field on the horizontal torus only (pressure, z-averages).
class ScalarField2D {
 public:
  explicit ScalarField2D(const Grid& grid);
  ScalarField2D(const Grid& grid, std::vector<double> values);

  static ScalarField2D constant(const Grid& grid, double value);
  static ScalarField2D from_function(const Grid& grid,
                                     const std::function<double(double, double)>& f);

  const Grid& grid() const noexcept { return grid_; }
  double& at(int i, int j) noexcept { return data_[grid_.index2(i, j)]; }
  double at(int i, int j) const noexcept { return data_[grid_.index2(i, j)]; }
  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }
  std::vector<double>& raw() noexcept { return data_; }
  const std::vector<double>& raw() const noexcept { return data_; }
  std::size_t size() const noexcept { return data_.size(); }

  double min() const;
  double max() const;
  double max_abs() const;
  void require_finite(std::string_view what) const;

  ScalarField2D& operator+=(const ScalarField2D& o);
  ScalarField2D& operator-=(const ScalarField2D& o);
  ScalarField2D& operator*=(double s);
  ScalarField2D& axpy(double a, const ScalarField2D& o);

 private:
  Grid grid_;
  std::vector<double> data_;
};

ScalarField2D operator+(ScalarField2D a, const ScalarField2D& b);
ScalarField2D operator-(ScalarField2D a, const ScalarField2D& b);
ScalarField2D operator*(double s, ScalarField2D a);

/// Two horizontal components of a 3D vector field.
struct VectorField3D2C {
  std::array<ScalarField3D, 2> c;

  explicit VectorField3D2C(const Grid& grid, ZParity parity = ZParity::Even)
      : c{ScalarField3D(grid, parity), ScalarField3D(grid, parity)} {}
  VectorField3D2C(ScalarField3D x, ScalarField3D y) : c{std::move(x), std::move(y)} {}

  const Grid& grid() const noexcept { return c[0].grid(); }
  ScalarField3D& operator[](int i) noexcept { return c[i]; }
  const ScalarField3D& operator[](int i) const noexcept { return c[i]; }

  double max_abs() const;
  void require_finite(std::string_view what) const;

  VectorField3D2C& operator+=(const VectorField3D2C& o);
  VectorField3D2C& operator-=(const VectorField3D2C& o);
  VectorField3D2C& operator*=(double s);
  VectorField3D2C& axpy(double a, const VectorField3D2C& o);
};

/// Copies a 2D field onto every z level.
ScalarField3D broadcast(const ScalarField2D& f);

void require_same_grid(const Grid& a, const Grid& b, std::string_view what);

}  // namespace cpe
