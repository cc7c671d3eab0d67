#pragma once

// Cached FFTW plans. Planning is serialized behind a mutex; execution goes
// through the new-array interface and is safe from several threads.

#include <fftw3.h>

#include <complex>
#include <vector>

namespace cpe::detail {

/// nplanes real (ny, nx) planes, contiguous, to half-spectrum planes.
fftw_plan plan_r2c_planes(int nx, int ny, int nplanes);
fftw_plan plan_c2r_planes(int nx, int ny, int nplanes);
/// In-place DCT-I (REDFT00) of length n along the slow axis of `columns`
/// interleaved columns (stride = columns, distance = 1).
fftw_plan plan_dct1_columns(int n, int columns);
/// In-place DST-I (RODFT00), same layout as plan_dct1_columns.
fftw_plan plan_dst1_columns(int n, int columns);
/// Full 3D real transforms with row-major extents (n0 slowest).
fftw_plan plan_r2c_3d(int n0, int n1, int n2);
fftw_plan plan_c2r_3d(int n0, int n1, int n2);

inline fftw_complex* as_fftw(std::complex<double>* p) {
  return reinterpret_cast<fftw_complex*>(p);
}

/// Per-thread scratch buffers reused across transforms.
std::vector<double>& real_scratch(int slot);
std::vector<std::complex<double>>& complex_scratch(int slot);

}  // namespace cpe::detail
