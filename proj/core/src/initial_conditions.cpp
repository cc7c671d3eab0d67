#include "cpe/initial_conditions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpe/errors.hpp"
#include "cpe/random_fields.hpp"
#include "cpe/snapshot.hpp"

namespace cpe {

State make_initial(const Grid& grid, const PhysParams& params, const InitialSpec& spec) {
  if (spec.family == "constant") {
    if (!(spec.sigma0 > 0.0) || !(spec.p0 > 0.0))
      throw ConstraintFault("initial.sigma0", "constant data must be positive");
    return State::constant(grid, spec.sigma0, spec.p0);
  }
  if (spec.family == "example-A") {
    State s = State::constant(grid, 1.0, 1.0);
    s.v[0] = ScalarField3D::from_function(grid, [&](double, double, double z) {
      return spec.amplitude * std::cos(std::numbers::pi * z);
    });
    return s;
  }
  if (spec.family == "smooth-random") {
    if (spec.band < 1) throw ConstraintFault("initial.band", "must be at least 1");
    Rng rng(spec.seed);
    State s(grid);
    for (int c = 0; c < 2; ++c) {
      s.v[c] = random_channel_field(grid, spec.band, rng);
      s.v[c] *= spec.amplitude;
    }
    s.sigma = random_channel_field(grid, spec.band, rng);
    s.sigma *= spec.amplitude;
    for (double& x : s.sigma.values()) x += spec.sigma0;
    s.p = random_plane_field(grid, spec.band, rng);
    s.p *= spec.amplitude;
    for (double& x : s.p.values()) x += spec.p0;
    const double ds = std::max(0.0, params.sigma_floor() - s.sigma.min());
    const double dp = std::max(0.0, params.p_floor() - s.p.min());
    for (double& x : s.sigma.values()) x += ds;
    for (double& x : s.p.values()) x += dp;
    return s;
  }
  if (spec.family == "snapshot") {
    Snapshot snap = read_snapshot(spec.snapshot_path);
    if (!(snap.state.grid() == grid))
      throw ConstraintFault("initial.snapshot", "snapshot grid differs from [grid]");
    return std::move(snap.state);
  }
  throw ConstraintFault("initial.family", "unknown family '" + spec.family + "'");
}

State random_direction(const Grid& grid, int band, std::uint64_t seed) {
  Rng rng(seed);
  State s(grid);
  for (int c = 0; c < 2; ++c) s.v[c] = random_channel_field(grid, band, rng);
  s.sigma = random_channel_field(grid, band, rng);
  s.p = random_plane_field(grid, band, rng);
  return s;
}

}  // namespace cpe
