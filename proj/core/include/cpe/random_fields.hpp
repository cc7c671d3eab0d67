#pragma once

#include <cstdint>
#include <random>

#include "cpe/field.hpp"

namespace cpe {

using Rng = std::mt19937_64;

/// Real field with independent unit-normal coefficients for all modes with
/// |kx|, |ky|, m <= band_limit (cosine in z, so Neumann at the walls),
/// scaled to unit sup norm. A zero field is returned unscaled.
ScalarField3D random_channel_field(const Grid& grid, int band_limit, Rng& rng);
ScalarField2D random_plane_field(const Grid& grid, int band_limit, Rng& rng);

}  // namespace cpe
