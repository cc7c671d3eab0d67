#pragma once

#include "cpe/field.hpp"
#include "cpe/state.hpp"

namespace cpe {

/// Squared Sobolev norm sum_{|alpha| <= k} ||D^alpha f||_2^2 over the channel
/// (or the torus for 2D fields), evaluated exactly from the spectrum.
/// k must lie in 0..4. Odd fields must vanish at the walls.
double sobolev_norm_sq(const ScalarField3D& f, int k);
double sobolev_norm_sq(const ScalarField2D& f, int k);
double sobolev_norm_sq(const VectorField3D2C& v, int k);

double sobolev_norm(const ScalarField3D& f, int k);
double sobolev_norm(const ScalarField2D& f, int k);
double sobolev_norm(const VectorField3D2C& v, int k);

inline double l2_norm(const ScalarField3D& f) { return sobolev_norm(f, 0); }
inline double l2_norm(const ScalarField2D& f) { return sobolev_norm(f, 0); }

/// (||v||_{H3}^2 + ||sigma||_{H3}^2 + ||p||_{H3}^2)^(1/2)
double state_h3_norm(const State& s);

/// (||v||_{H1}^2 + ||sigma||_2^2 + ||p||_{H1}^2)^(1/2), the difference norm
/// used for stability and regularization-limit comparisons.
double difference_norm(const State& a, const State& b);

/// Sum over |alpha| <= k of X^a Y^b Z^c with a + b + c = |alpha|, where X, Y, Z
/// are the squared wavenumbers of one Fourier mode.
double derivative_weight(double kx2, double ky2, double kz2, int k);

}  // namespace cpe
