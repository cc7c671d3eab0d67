#include "cpe/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpe/errors.hpp"

namespace cpe {

namespace {

double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }
double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }
double max_abs_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void check_finite(const std::vector<double>& v, std::string_view what) {
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (!std::isfinite(v[n]))
      throw NumericalFault("non-finite value in " + std::string(what) + " at index " +
                           std::to_string(n));
  }
}

}  // namespace

void require_same_grid(const Grid& a, const Grid& b, std::string_view what) {
  if (!(a == b)) throw UsageFault("grid mismatch in " + std::string(what));
}

// ---------------------------------------------------------------------------

ScalarField3D::ScalarField3D(const Grid& grid, ZParity parity)
    : grid_(grid), parity_(parity), data_(grid.size3(), 0.0) {}

ScalarField3D::ScalarField3D(const Grid& grid, ZParity parity, std::vector<double> values)
    : grid_(grid), parity_(parity), data_(std::move(values)) {
  if (data_.size() != grid_.size3()) throw UsageFault("ScalarField3D: value count mismatch");
}

ScalarField3D ScalarField3D::constant(const Grid& grid, double value) {
  ScalarField3D f(grid);
  std::fill(f.data_.begin(), f.data_.end(), value);
  return f;
}

ScalarField3D ScalarField3D::from_function(
    const Grid& grid, const std::function<double(double, double, double)>& fn,
    ZParity parity) {
  ScalarField3D f(grid, parity);
  for (int k = 0; k <= grid.nz(); ++k)
    for (int j = 0; j < grid.ny(); ++j)
      for (int i = 0; i < grid.nx(); ++i) f.at(i, j, k) = fn(grid.x(i), grid.y(j), grid.z(k));
  return f;
}

double ScalarField3D::min() const { return min_of(data_); }
double ScalarField3D::max() const { return max_of(data_); }
double ScalarField3D::max_abs() const { return max_abs_of(data_); }

double ScalarField3D::max_abs_at_walls() const {
  const std::size_t plane = grid_.plane_size();
  const std::size_t top = plane * grid_.nz();
  double m = 0.0;
  for (std::size_t n = 0; n < plane; ++n)
    m = std::max({m, std::abs(data_[n]), std::abs(data_[top + n])});
  return m;
}

void ScalarField3D::require_finite(std::string_view what) const { check_finite(data_, what); }

ScalarField3D& ScalarField3D::operator+=(const ScalarField3D& o) { return axpy(1.0, o); }
ScalarField3D& ScalarField3D::operator-=(const ScalarField3D& o) { return axpy(-1.0, o); }

ScalarField3D& ScalarField3D::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

ScalarField3D& ScalarField3D::axpy(double a, const ScalarField3D& o) {
  require_same_grid(grid_, o.grid_, "ScalarField3D arithmetic");
  if (parity_ != o.parity_) throw UsageFault("ScalarField3D arithmetic: parity mismatch");
  for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += a * o.data_[n];
  return *this;
}

ScalarField3D operator+(ScalarField3D a, const ScalarField3D& b) { return a += b; }
ScalarField3D operator-(ScalarField3D a, const ScalarField3D& b) { return a -= b; }
ScalarField3D operator*(double s, ScalarField3D a) { return a *= s; }

// ---------------------------------------------------------------------------

ScalarField2D::ScalarField2D(const Grid& grid) : grid_(grid), data_(grid.size2(), 0.0) {}

ScalarField2D::ScalarField2D(const Grid& grid, std::vector<double> values)
    : grid_(grid), data_(std::move(values)) {
  if (data_.size() != grid_.size2()) throw UsageFault("ScalarField2D: value count mismatch");
}

ScalarField2D ScalarField2D::constant(const Grid& grid, double value) {
  ScalarField2D f(grid);
  std::fill(f.data_.begin(), f.data_.end(), value);
  return f;
}

ScalarField2D ScalarField2D::from_function(const Grid& grid,
                                           const std::function<double(double, double)>& fn) {
  ScalarField2D f(grid);
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) f.at(i, j) = fn(grid.x(i), grid.y(j));
  return f;
}

double ScalarField2D::min() const { return min_of(data_); }
double ScalarField2D::max() const { return max_of(data_); }
double ScalarField2D::max_abs() const { return max_abs_of(data_); }
void ScalarField2D::require_finite(std::string_view what) const { check_finite(data_, what); }

ScalarField2D& ScalarField2D::operator+=(const ScalarField2D& o) { return axpy(1.0, o); }
ScalarField2D& ScalarField2D::operator-=(const ScalarField2D& o) { return axpy(-1.0, o); }

ScalarField2D& ScalarField2D::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

ScalarField2D& ScalarField2D::axpy(double a, const ScalarField2D& o) {
  require_same_grid(grid_, o.grid_, "ScalarField2D arithmetic");
  for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += a * o.data_[n];
  return *this;
}

ScalarField2D operator+(ScalarField2D a, const ScalarField2D& b) { return a += b; }
ScalarField2D operator-(ScalarField2D a, const ScalarField2D& b) { return a -= b; }
ScalarField2D operator*(double s, ScalarField2D a) { return a *= s; }

// ---------------------------------------------------------------------------

double VectorField3D2C::max_abs() const { return std::max(c[0].max_abs(), c[1].max_abs()); }

void VectorField3D2C::require_finite(std::string_view what) const {
  c[0].require_finite(what);
  c[1].require_finite(what);
}

VectorField3D2C& VectorField3D2C::operator+=(const VectorField3D2C& o) { return axpy(1.0, o); }
VectorField3D2C& VectorField3D2C::operator-=(const VectorField3D2C& o) { return axpy(-1.0, o); }

VectorField3D2C& VectorField3D2C::operator*=(double s) {
  c[0] *= s;
  c[1] *= s;
  return *this;
}

VectorField3D2C& VectorField3D2C::axpy(double a, const VectorField3D2C& o) {
  c[0].axpy(a, o.c[0]);
  c[1].axpy(a, o.c[1]);
  return *this;
}

ScalarField3D broadcast(const ScalarField2D& f) {
  const Grid& g = f.grid();
  ScalarField3D out(g);
  const std::size_t plane = g.plane_size();
  for (std::size_t k = 0; k < g.levels(); ++k)
    std::copy(f.raw().begin(), f.raw().end(), out.raw().begin() + k * plane);
  return out;
}

}  // namespace cpe
