#include "fft_plans.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace cpe::detail {

namespace {

enum class PlanKind { R2CPlanes, C2RPlanes, Dct1, Dst1, R2C3D, C2R3D };

using Key = std::tuple<PlanKind, int, int, int>;

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  template <class Make>
  fftw_plan get(const Key& key, Make&& make) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    fftw_plan p = make();
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

constexpr unsigned kFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

struct RealBuf {
  explicit RealBuf(std::size_t n) : p(fftw_alloc_real(n)) {}
  ~RealBuf() { fftw_free(p); }
  double* p;
};

struct ComplexBuf {
  explicit ComplexBuf(std::size_t n) : p(fftw_alloc_complex(n)) {}
  ~ComplexBuf() { fftw_free(p); }
  fftw_complex* p;
};

}  // namespace

fftw_plan plan_r2c_planes(int nx, int ny, int nplanes) {
  return cache().get({PlanKind::R2CPlanes, nx, ny, nplanes}, [&] {
    const int n[2] = {ny, nx};
    const int real_dist = nx * ny;
    const int cplx_dist = ny * (nx / 2 + 1);
    RealBuf in(static_cast<std::size_t>(real_dist) * nplanes);
    ComplexBuf out(static_cast<std::size_t>(cplx_dist) * nplanes);
    return fftw_plan_many_dft_r2c(2, n, nplanes, in.p, nullptr, 1, real_dist, out.p, nullptr,
                                  1, cplx_dist, kFlags);
  });
}

fftw_plan plan_c2r_planes(int nx, int ny, int nplanes) {
  return cache().get({PlanKind::C2RPlanes, nx, ny, nplanes}, [&] {
    const int n[2] = {ny, nx};
    const int real_dist = nx * ny;
    const int cplx_dist = ny * (nx / 2 + 1);
    ComplexBuf in(static_cast<std::size_t>(cplx_dist) * nplanes);
    RealBuf out(static_cast<std::size_t>(real_dist) * nplanes);
    return fftw_plan_many_dft_c2r(2, n, nplanes, in.p, nullptr, 1, cplx_dist, out.p, nullptr,
                                  1, real_dist, kFlags);
  });
}

namespace {

fftw_plan plan_columns(PlanKind kind, int n, int columns) {
  return cache().get({kind, n, columns, 0}, [&] {
    const int len[1] = {n};
    const fftw_r2r_kind k[1] = {kind == PlanKind::Dct1 ? FFTW_REDFT00 : FFTW_RODFT00};
    RealBuf buf(static_cast<std::size_t>(n) * columns);
    return fftw_plan_many_r2r(1, len, columns, buf.p, nullptr, columns, 1, buf.p, nullptr,
                              columns, 1, k, kFlags);
  });
}

}  // namespace

fftw_plan plan_dct1_columns(int n, int columns) { return plan_columns(PlanKind::Dct1, n, columns); }
fftw_plan plan_dst1_columns(int n, int columns) { return plan_columns(PlanKind::Dst1, n, columns); }

fftw_plan plan_r2c_3d(int n0, int n1, int n2) {
  return cache().get({PlanKind::R2C3D, n0, n1, n2}, [&] {
    const std::size_t nreal = static_cast<std::size_t>(n0) * n1 * n2;
    RealBuf in(nreal);
    ComplexBuf out(static_cast<std::size_t>(n0) * n1 * (n2 / 2 + 1));
    return fftw_plan_dft_r2c_3d(n0, n1, n2, in.p, out.p, kFlags);
  });
}

fftw_plan plan_c2r_3d(int n0, int n1, int n2) {
  return cache().get({PlanKind::C2R3D, n0, n1, n2}, [&] {
    const std::size_t nreal = static_cast<std::size_t>(n0) * n1 * n2;
    ComplexBuf in(static_cast<std::size_t>(n0) * n1 * (n2 / 2 + 1));
    RealBuf out(nreal);
    return fftw_plan_dft_c2r_3d(n0, n1, n2, in.p, out.p, kFlags);
  });
}

std::vector<double>& real_scratch(int slot) {
  thread_local std::vector<double> bufs[4];
  return bufs[slot];
}

std::vector<std::complex<double>>& complex_scratch(int slot) {
  thread_local std::vector<std::complex<double>> bufs[4];
  return bufs[slot];
}

}  // namespace cpe::detail
