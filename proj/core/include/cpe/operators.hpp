#pragma once

#include "cpe/field.hpp"

/// Field-level spectral operators. Inputs are never modified.
///
/// Odd (sine) fields may carry nonzero wall values; these are handled as a
/// linear-in-z ramp plus a sine series, so ddz and products stay spectrally
/// accurate for the output of vertical_cumulative_integral.
namespace cpe {

ScalarField3D ddx(const ScalarField3D& f);
ScalarField3D ddy(const ScalarField3D& f);
/// Flips parity: cosine series in, sine series out, and vice versa.
ScalarField3D ddz(const ScalarField3D& f);
ScalarField3D d2z(const ScalarField3D& f);
ScalarField3D laplacian_h(const ScalarField3D& f);
ScalarField3D laplacian(const ScalarField3D& f);
ScalarField2D ddx(const ScalarField2D& f);
ScalarField2D ddy(const ScalarField2D& f);
ScalarField2D laplacian_h(const ScalarField2D& f);

ScalarField3D divergence_h(const VectorField3D2C& v);
VectorField3D2C gradient_h(const ScalarField3D& f);

/// Integral over z in [0, 1] (mode-0 extraction for cosine fields).
ScalarField2D vertical_average(const ScalarField3D& f);
/// f minus its vertical average. Requires an even field.
ScalarField3D fluctuation(const ScalarField3D& f);
/// F(z) = integral of f from 0 to z, integrated mode by mode. Requires an even
/// field; the result is odd-tagged with F(0) = 0 and F(1) = vertical average.
ScalarField3D vertical_cumulative_integral(const ScalarField3D& f);

/// Pointwise products on the 3/2 padded grid, truncated back. Parity of the
/// result is the product of the input parities.
ScalarField3D multiply_dealiased(const ScalarField3D& f, const ScalarField3D& g);
ScalarField3D multiply_dealiased(const ScalarField3D& f, const ScalarField2D& g);
ScalarField2D multiply_dealiased(const ScalarField2D& f, const ScalarField2D& g);
ScalarField3D multiply_dealiased(double c, const ScalarField3D& f);
ScalarField2D multiply_dealiased(double c, const ScalarField2D& f);

/// Spectral projection: transforms and back, dropping Nyquist modes.
ScalarField3D project(const ScalarField3D& f);
ScalarField2D project(const ScalarField2D& f);

/// Max |d f / dz| on z = 0 and z = 1 from the spectral derivative.
double neumann_defect(const ScalarField3D& f);

/// Heuristic check that nodal data is compatible with a cosine series: the
/// one-sided fourth-order wall derivative must be small relative to the
/// interior derivative scale.
bool is_neumann_compatible(const ScalarField3D& f, double rel_tol = 0.5);

}  // namespace cpe
