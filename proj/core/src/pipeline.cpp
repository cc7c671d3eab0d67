#include "pipeline.hpp"

#include <numbers>

#include "cpe/errors.hpp"

namespace cpe::detail {

namespace sp = spectral;
using sp::Spectrum2D;
using sp::Spectrum3D;

namespace {

constexpr double kPi = std::numbers::pi;

Spectrum3D sum(Spectrum3D a, const Spectrum3D& b) { return a += b; }

}  // namespace

Pipeline::Pipeline(const VectorField3D2C& v, const ScalarField3D* sigma, const ScalarField2D* p,
                   const PhysParams& params)
    : params_(params),
      coarse_(v.grid().dims()),
      fine_(v.grid().padded()),
      has_sigma_(sigma != nullptr),
      has_p_(p != nullptr),
      V1_(sp::forward(v[0])),
      V2_(sp::forward(v[1])),
      S_(coarse_, ZParity::Even),
      P_(coarse_),
      V1x_(sp::ddx(V1_)),
      V1y_(sp::ddy(V1_)),
      V2x_(sp::ddx(V2_)),
      V2y_(sp::ddy(V2_)),
      V1z_(sp::ddz(V1_)),
      V2z_(sp::ddz(V2_)) {
  v1_ = fine3(V1_);
  v2_ = fine3(V2_);
  v1x_ = fine3(V1x_);
  v1y_ = fine3(V1y_);
  v2x_ = fine3(V2x_);
  v2y_ = fine3(V2y_);
  v1z_ = fine3(V1z_);
  v2z_ = fine3(V2z_);
  if (sigma) {
    require_same_grid(v.grid(), sigma->grid(), "Pipeline");
    S_ = sp::forward(*sigma);
    s_ = fine3(S_);
    sx_ = fine3(sp::ddx(S_));
    sy_ = fine3(sp::ddy(S_));
    sz_ = fine3(sp::ddz(S_));
  }
  if (p) {
    require_same_grid(v.grid(), p->grid(), "Pipeline");
    P_ = sp::forward(*p);
    px_ = fine2(sp::ddx(P_));
    py_ = fine2(sp::ddy(P_));
    std::vector<double> inv(p->size());
    for (std::size_t n = 0; n < inv.size(); ++n) inv[n] = 1.0 / p->raw()[n];
    Pinv_ = sp::forward(inv, coarse_);
  }
}

std::vector<double> Pipeline::fine3(const Spectrum3D& s) const { return sp::to_fine(s, fine_); }
std::vector<double> Pipeline::fine2(const Spectrum2D& s) const { return sp::to_fine(s, fine_); }

Spectrum3D Pipeline::back3(const std::vector<double>& f, ZParity parity) const {
  return sp::from_fine(f, fine_, parity, coarse_);
}

Spectrum2D Pipeline::back2(const std::vector<double>& f) const {
  return sp::from_fine(f, fine_, coarse_);
}

void Pipeline::require_sigma() const {
  if (!has_sigma_) throw UsageFault("Pipeline: sigma required");
}

void Pipeline::require_p() const {
  if (!has_p_) throw UsageFault("Pipeline: pressure required");
}

const Spectrum3D& Pipeline::heating() {
  if (!Q_) {
    const double mu = params_.mu();
    const double lambda = params_.lambda();
    std::vector<double> q(v1_.size());
    for (std::size_t n = 0; n < q.size(); ++n) {
      const double a = v1x_[n], d = v2y_[n], sh = v1y_[n] + v2x_[n], div = a + d;
      q[n] = mu * (2 * a * a + 2 * d * d + sh * sh) + lambda * div * div +
             mu * (v1z_[n] * v1z_[n] + v2z_[n] * v2z_[n]);
    }
    Q_ = back3(q, ZParity::Even);
  }
  return *Q_;
}

std::array<Spectrum3D, 3> Pipeline::stress() const {
  const double mu = params_.mu();
  const double lambda = params_.lambda();
  Spectrum3D div = sum(V1x_, V2y_);
  Spectrum3D xx = V1x_;
  xx *= 2 * mu;
  xx.axpy(lambda, div);
  Spectrum3D xy = sum(V1y_, V2x_);
  xy *= mu;
  Spectrum3D yy = V2y_;
  yy *= 2 * mu;
  yy.axpy(lambda, div);
  return {xx, xy, yy};
}

const Spectrum3D& Pipeline::phi() {
  if (!Phi_) {
    require_p();
    const std::size_t plane = fine_.plane();
    const std::vector<double> vb1 = fine2(sp::mean_plane(V1_));
    const std::vector<double> vb2 = fine2(sp::mean_plane(V2_));
    std::vector<double> a(v1_.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
      const std::size_t h = n % plane;
      a[n] = (v1_[n] - vb1[h]) * px_[h] + (v2_[n] - vb2[h]) * py_[h];
    }
    Spectrum3D A = back3(a, ZParity::Even);
    A.axpy(-(params_.gamma() - 1.0), sp::without_mean(heating()));
    std::vector<double> c = fine3(A);
    const std::vector<double> r = fine2(*Pinv_);
    for (std::size_t n = 0; n < c.size(); ++n) c[n] *= r[n % plane];
    Spectrum3D phi = sp::without_mean(sum(V1x_, V2y_));
    phi.axpy(1.0 / params_.gamma(), back3(c, ZParity::Even));
    Phi_ = std::move(phi);
  }
  return *Phi_;
}

const Spectrum3D& Pipeline::w_sine() {
  if (!W_) {
    require_sigma();
    const Spectrum3D& phi_s = phi();
    Spectrum3D w = sp::ddz(S_);
    w *= params_.nu();
    for (int m = 1; m < coarse_.nz; ++m) {
      const double s = 1.0 / (kPi * m);
      for (int j = 0; j < coarse_.ny; ++j)
        for (int i = 0; i < coarse_.nkx(); ++i) w.at(m, j, i) -= s * phi_s.at(m, j, i);
    }
    W_ = std::move(w);
    Spectrum2D ramp = sp::mean_plane(phi_s);
    ramp *= -1.0;
    Wramp_ = std::move(ramp);
  }
  return *W_;
}

const Spectrum2D& Pipeline::w_ramp() {
  w_sine();
  return *Wramp_;
}

const std::vector<double>& Pipeline::w_fine() {
  if (w_.empty()) {
    w_ = fine3(w_sine());
    const std::vector<double> ramp = fine2(w_ramp());
    const std::size_t plane = fine_.plane();
    for (int k = 0; k <= fine_.nz; ++k) {
      const double z = static_cast<double>(k) / fine_.nz;
      double* row = w_.data() + plane * k;
      for (std::size_t h = 0; h < plane; ++h) row[h] += z * ramp[h];
    }
  }
  return w_;
}

std::array<Spectrum3D, 2> Pipeline::phi1() {
  require_sigma();
  require_p();
  const std::vector<double>& w = w_fine();
  const std::size_t plane = fine_.plane();
  std::vector<double> a(v1_.size()), b(v1_.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    const std::size_t h = n % plane;
    a[n] = -(v1_[n] * v1x_[n] + v2_[n] * v1y_[n]) - w[n] * v1z_[n] - s_[n] * px_[h];
    b[n] = -(v1_[n] * v2x_[n] + v2_[n] * v2y_[n]) - w[n] * v2z_[n] - s_[n] * py_[h];
  }
  return {back3(a, ZParity::Even), back3(b, ZParity::Even)};
}

Spectrum3D Pipeline::phi2() {
  require_sigma();
  const std::vector<double>& w = w_fine();
  const std::vector<double> ph = fine3(phi());
  std::vector<double> a(v1_.size());
  for (std::size_t n = 0; n < a.size(); ++n)
    a[n] = -w[n] * sz_[n] + s_[n] * (v1x_[n] + v2y_[n] - ph[n]);
  return back3(a, ZParity::Even);
}

Spectrum2D Pipeline::phi3() {
  require_p();
  const std::vector<double> p = fine2(P_);
  const std::vector<double> divb = fine2(sp::mean_plane(sum(V1x_, V2y_)));
  std::vector<double> a(p.size());
  for (std::size_t h = 0; h < a.size(); ++h) a[h] = -params_.gamma() * p[h] * divb[h];
  Spectrum2D out = back2(a);
  out.axpy(params_.gamma() - 1.0, sp::mean_plane(heating()));
  return out;
}

Spectrum3D Pipeline::sigma_advection() {
  require_sigma();
  std::vector<double> a(v1_.size());
  for (std::size_t n = 0; n < a.size(); ++n) a[n] = -(v1_[n] * sx_[n] + v2_[n] * sy_[n]);
  return back3(a, ZParity::Even);
}

Spectrum2D Pipeline::p_advection() {
  require_p();
  const std::vector<double> vb1 = fine2(sp::mean_plane(V1_));
  const std::vector<double> vb2 = fine2(sp::mean_plane(V2_));
  std::vector<double> a(vb1.size());
  for (std::size_t h = 0; h < a.size(); ++h) a[h] = -(vb1[h] * px_[h] + vb2[h] * py_[h]);
  return back2(a);
}

StateTendency Pipeline::tendency(const Grid& grid) {
  require_sigma();
  require_p();
  const double mu = params_.mu();
  const double lambda = params_.lambda();
  const double eps = params_.epsilon();
  const std::vector<double>& w = w_fine();
  const std::size_t plane = fine_.plane();

  // sigma-weighted linear part: -grad p + mu lap v + (mu + lambda) grad div v
  const Spectrum3D div = sum(V1x_, V2y_);
  Spectrum3D L1 = sp::laplacian(V1_);
  L1 *= mu;
  L1.axpy(mu + lambda, sp::ddx(div));
  sp::add_to_mean(L1, sp::ddx(P_), -1.0);
  Spectrum3D L2 = sp::laplacian(V2_);
  L2 *= mu;
  L2.axpy(mu + lambda, sp::ddy(div));
  sp::add_to_mean(L2, sp::ddy(P_), -1.0);
  const std::vector<double> l1 = fine3(L1);
  const std::vector<double> l2 = fine3(L2);

  std::vector<double> a(v1_.size()), b(v1_.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    a[n] = -(v1_[n] * v1x_[n] + v2_[n] * v1y_[n]) - w[n] * v1z_[n] + s_[n] * l1[n];
    b[n] = -(v1_[n] * v2x_[n] + v2_[n] * v2y_[n]) - w[n] * v2z_[n] + s_[n] * l2[n];
  }
  const Spectrum3D dv1 = back3(a, ZParity::Even);
  const Spectrum3D dv2 = back3(b, ZParity::Even);

  const std::vector<double> ph = fine3(phi());
  const std::vector<double> szz = fine3(sp::d2z(S_));
  const double nu = params_.nu();
  for (std::size_t n = 0; n < a.size(); ++n) {
    a[n] = -(v1_[n] * sx_[n] + v2_[n] * sy_[n]) - w[n] * sz_[n] +
           s_[n] * (v1x_[n] + v2y_[n] - ph[n] + nu * szz[n]);
  }
  Spectrum3D ds = back3(a, ZParity::Even);
  if (eps != 0.0) ds.axpy(eps, sp::laplacian_h(S_));

  const std::vector<double> vb1 = fine2(sp::mean_plane(V1_));
  const std::vector<double> vb2 = fine2(sp::mean_plane(V2_));
  const std::vector<double> divb = fine2(sp::mean_plane(div));
  const std::vector<double> p = fine2(P_);
  std::vector<double> c(plane);
  for (std::size_t h = 0; h < plane; ++h)
    c[h] = -(vb1[h] * px_[h] + vb2[h] * py_[h]) - params_.gamma() * p[h] * divb[h];
  Spectrum2D dp = back2(c);
  dp.axpy(params_.gamma() - 1.0, sp::mean_plane(heating()));
  if (eps != 0.0) dp.axpy(eps, sp::laplacian_h(P_));

  return StateTendency(VectorField3D2C(sp::inverse(dv1, grid), sp::inverse(dv2, grid)),
                       sp::inverse(ds, grid), sp::inverse(dp, grid));
}

}  // namespace cpe::detail
