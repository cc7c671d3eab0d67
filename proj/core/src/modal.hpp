#pragma once

// Spectral form of a channel field. Odd fields carry their wall values as a
// separate linear ramp lo (1 - z) + hi z so the sine part vanishes at the walls.

#include <optional>
#include <span>
#include <vector>

#include "cpe/field.hpp"
#include "cpe/spectral.hpp"

namespace cpe::detail {

struct Modal {
  spectral::Spectrum3D s;
  std::optional<spectral::Spectrum2D> lo;
  std::optional<spectral::Spectrum2D> hi;

  ZParity parity() const noexcept { return s.parity(); }
  const Dims& dims() const noexcept { return s.dims(); }
  bool has_ramp() const noexcept { return lo.has_value(); }
};

Modal to_modal(const ScalarField3D& f);
Modal to_modal(std::span<const double> nodal, const Dims& d, ZParity parity);
ScalarField3D from_modal(const Modal& m, const Grid& grid);
void from_modal(const Modal& m, std::span<double> nodal);

std::vector<double> on_fine(const Modal& m, const Dims& fine);
Modal from_fine_modal(std::span<const double> nodal, const Dims& fine, ZParity parity,
                      const Dims& coarse);

Modal ddx(const Modal& m);
Modal ddy(const Modal& m);
Modal ddz(const Modal& m);

/// Mode-0 average in z, including the ramp and the odd sine modes.
spectral::Spectrum2D z_average(const Modal& m);

}  // namespace cpe::detail
