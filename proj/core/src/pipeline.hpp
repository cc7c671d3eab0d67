#pragma once

// Shared spectral evaluation of the derived fields and right-hand sides.
// Every product is formed on the 3/2 padded grid.

#include <array>
#include <optional>
#include <vector>

#include "cpe/params.hpp"
#include "cpe/spectral.hpp"
#include "cpe/state.hpp"

namespace cpe::detail {

class Pipeline {
 public:
  /// sigma and p may be null when only velocity-based quantities are needed.
  Pipeline(const VectorField3D2C& v, const ScalarField3D* sigma, const ScalarField2D* p,
           const PhysParams& params);

  const spectral::Spectrum3D& heating();
  /// Strain stress components (xx, xy, yy), linear in the velocity gradient.
  std::array<spectral::Spectrum3D, 3> stress() const;
  const spectral::Spectrum3D& phi();
  /// Sine part of w and the coefficient plane of its ramp -phibar * z.
  const spectral::Spectrum3D& w_sine();
  const spectral::Spectrum2D& w_ramp();

  /// -(v . grad) v_i - w dz v_i - sigma dp/dx_i
  std::array<spectral::Spectrum3D, 2> phi1();
  /// -w dz sigma + sigma (div v - phi)
  spectral::Spectrum3D phi2();
  /// (gamma - 1) Qbar - gamma p div vbar
  spectral::Spectrum2D phi3();
  spectral::Spectrum3D sigma_advection();
  spectral::Spectrum2D p_advection();

  /// Full right-hand side of the regularized system.
  StateTendency tendency(const Grid& grid);

 private:
  const std::vector<double>& w_fine();
  void require_sigma() const;
  void require_p() const;

  std::vector<double> fine3(const spectral::Spectrum3D& s) const;
  std::vector<double> fine2(const spectral::Spectrum2D& s) const;
  spectral::Spectrum3D back3(const std::vector<double>& f, ZParity parity) const;
  spectral::Spectrum2D back2(const std::vector<double>& f) const;

  PhysParams params_;
  Dims coarse_;
  Dims fine_;
  bool has_sigma_;
  bool has_p_;

  spectral::Spectrum3D V1_, V2_, S_;
  spectral::Spectrum2D P_;
  spectral::Spectrum3D V1x_, V1y_, V2x_, V2y_, V1z_, V2z_;

  std::vector<double> v1_, v2_, v1x_, v1y_, v2x_, v2y_, v1z_, v2z_;
  std::vector<double> s_, sx_, sy_, sz_;
  std::vector<double> px_, py_;
  std::vector<double> w_;

  std::optional<spectral::Spectrum2D> Pinv_;
  std::optional<spectral::Spectrum3D> Q_, Phi_, W_;
  std::optional<spectral::Spectrum2D> Wramp_;
};

}  // namespace cpe::detail
