#pragma once

#include <cstdint>
#include <string>

#include "cpe/params.hpp"
#include "cpe/state.hpp"

namespace cpe {

/// Named initial-condition family.
///   constant:      v = 0, sigma = sigma0, p = p0
///   example-A:     sigma = 1, v = (amplitude cos(pi z), 0), p = 1
///   smooth-random: v, sigma - sigma0, p - p0 each amplitude times a seeded
///                  band-limited cosine field of unit sup norm; sigma and p
///                  are then shifted up to respect the floors if needed
///   snapshot:      read from snapshot_path (grid must match)
struct InitialSpec {
  std::string family = "constant";
  double sigma0 = 1.0;
  double p0 = 1.0;
  double amplitude = 0.1;
  int band = 3;
  std::uint64_t seed = 1;
  std::string snapshot_path;
};

State make_initial(const Grid& grid, const PhysParams& params, const InitialSpec& spec);

/// Perturbation direction for continuous-dependence runs: all components
/// unit-sup-norm random fields drawn from `seed`.
State random_direction(const Grid& grid, int band, std::uint64_t seed);

}  // namespace cpe
