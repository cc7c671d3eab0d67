#pragma once

#include <cstdint>
#include <string>

#include "cpe/params.hpp"
#include "cpe/state.hpp"

namespace cpe {

/// Binary layout: "CPE1", u32 version, u32 nx, ny, nz, f64 time,
/// f64 gamma, mu, lambda, kappa, R, epsilon (76 bytes), then little-endian
/// f64 arrays v1, v2, sigma (x fastest, then y, then z) and p.
inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::size_t kSnapshotHeaderBytes = 76;

struct Snapshot {
  State state;
  double time = 0.0;
  PhysParams params;
};

struct SnapshotHeader {
  std::uint32_t version = 0;
  int nx = 0, ny = 0, nz = 0;
  double time = 0.0;
  double gamma = 0, mu = 0, lambda = 0, kappa = 0, R = 0, epsilon = 0;
};

/// Throws IoFault when the file cannot be written.
void write_snapshot(const std::string& path, const State& state, double time,
                    const PhysParams& params);
/// Throws IoFault (unreadable) or FormatFault (bad magic, version,
/// dimensions or length; carries the byte offset).
Snapshot read_snapshot(const std::string& path);
SnapshotHeader read_snapshot_header(const std::string& path);

}  // namespace cpe
