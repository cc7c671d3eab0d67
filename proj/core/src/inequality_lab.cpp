#include "cpe/inequality_lab.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "cpe/errors.hpp"
#include "cpe/parallel.hpp"
#include "fft_plans.hpp"

namespace cpe {

namespace {

using cplx = std::complex<double>;
using Multi = std::array<int, 3>;

constexpr double kVolume = 8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;

// Half spectrum of a real field on the periodic cube with n points per side.
struct Cube {
  int n;
  std::vector<cplx> c;

  explicit Cube(int n_) : n(n_), c(static_cast<std::size_t>(n_) * n_ * (n_ / 2 + 1)) {}
  int nkx() const { return n / 2 + 1; }
  std::size_t index(int k, int j, int i) const {
    return (static_cast<std::size_t>(k) * n + j) * nkx() + i;
  }
  int wave(int idx) const { return idx <= n / 2 ? idx : idx - n; }
  int slot(int kw) const { return kw >= 0 ? kw : n + kw; }
};

Cube forward(const std::vector<double>& u, int n) {
  Cube s(n);
  std::vector<double> buf(u);
  fftw_execute_dft_r2c(detail::plan_r2c_3d(n, n, n), buf.data(), detail::as_fftw(s.c.data()));
  const double scale = 1.0 / (static_cast<double>(n) * n * n);
  for (auto& x : s.c) x *= scale;
  if (n % 2 == 0) {
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < s.nkx(); ++i)
          if (i == n / 2 || j == n / 2 || k == n / 2) s.c[s.index(k, j, i)] = 0.0;
  }
  return s;
}

std::vector<double> inverse(const Cube& s) {
  std::vector<cplx> buf(s.c);
  std::vector<double> u(static_cast<std::size_t>(s.n) * s.n * s.n);
  fftw_execute_dft_c2r(detail::plan_c2r_3d(s.n, s.n, s.n), detail::as_fftw(buf.data()), u.data());
  return u;
}

Cube resample(const Cube& s, int to) {
  Cube out(to);
  const int lim = (std::min(s.n, to) - 1) / 2;
  for (int k = 0; k < s.n; ++k) {
    const int kw = s.wave(k);
    if (std::abs(kw) > lim) continue;
    for (int j = 0; j < s.n; ++j) {
      const int jw = s.wave(j);
      if (std::abs(jw) > lim) continue;
      for (int i = 0; i <= lim; ++i) out.c[out.index(out.slot(kw), out.slot(jw), i)] = s.c[s.index(k, j, i)];
    }
  }
  return out;
}

Cube derivative(const Cube& s, const Multi& b) {
  Cube out(s.n);
  const cplx I(0.0, 1.0);
  auto power = [&](double k, int e) {
    cplx r = 1.0;
    for (int q = 0; q < e; ++q) r *= I * k;
    return r;
  };
  for (int k = 0; k < s.n; ++k)
    for (int j = 0; j < s.n; ++j)
      for (int i = 0; i < s.nkx(); ++i) {
        const std::size_t idx = s.index(k, j, i);
        if (s.c[idx] == cplx{}) continue;
        out.c[idx] = power(i, b[0]) * power(s.wave(j), b[1]) * power(s.wave(k), b[2]) * s.c[idx];
      }
  return out;
}

// Exact L2 norm by Parseval.
double l2(const Cube& s) {
  double t = 0.0;
  for (int k = 0; k < s.n; ++k)
    for (int j = 0; j < s.n; ++j)
      for (int i = 0; i < s.nkx(); ++i) {
        const double mult = (i == 0 || (s.n % 2 == 0 && i == s.n / 2)) ? 1.0 : 2.0;
        t += mult * std::norm(s.c[s.index(k, j, i)]);
      }
  return std::sqrt(t * kVolume);
}

double nodal_norm(const std::vector<double>& u, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : u) m = std::max(m, std::abs(x));
    return m;
  }
  double t = 0.0;
  for (double x : u) t += std::pow(std::abs(x), p);
  return std::pow(t * kVolume / static_cast<double>(u.size()), 1.0 / p);
}

int fine_size(int n) { return 3 * n / 2 + (3 * n / 2) % 2; }

// L^p norm; exponents other than 2 use nodal values on the 3/2 grid.
double lp(const Cube& s, double p) {
  if (p == 2.0) return l2(s);
  return nodal_norm(inverse(resample(s, fine_size(s.n))), p);
}

std::vector<Multi> multi_indices(int order) {
  std::vector<Multi> out;
  for (int a = order; a >= 0; --a)
    for (int b = order - a; b >= 0; --b) out.push_back({a, b, order - a - b});
  return out;
}

std::vector<Multi> multi_indices_upto(int m) {
  std::vector<Multi> out;
  for (int o = 0; o <= m; ++o)
    for (const Multi& b : multi_indices(o)) out.push_back(b);
  return out;
}

double sobolev(const Cube& s, int m, double p) {
  if (m < 0) return 0.0;
  double acc = 0.0;
  for (const Multi& b : multi_indices_upto(m)) {
    const double v = lp(derivative(s, b), p);
    if (std::isinf(p)) {
      acc = std::max(acc, v);
    } else {
      acc += std::pow(v, p);
    }
  }
  return std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
}

double grad_norm(const Cube& s, double p) {
  const int nf = fine_size(s.n);
  std::vector<double> mag;
  for (int d = 0; d < 3; ++d) {
    Multi b{0, 0, 0};
    b[d] = 1;
    if (p == 2.0) continue;
    const std::vector<double> u = inverse(resample(derivative(s, b), nf));
    if (mag.empty()) mag.assign(u.size(), 0.0);
    for (std::size_t n = 0; n < u.size(); ++n) mag[n] += u[n] * u[n];
  }
  if (p == 2.0) {
    double t = 0.0;
    for (int d = 0; d < 3; ++d) {
      Multi b{0, 0, 0};
      b[d] = 1;
      t += std::pow(l2(derivative(s, b)), 2);
    }
    return std::sqrt(t);
  }
  for (double& x : mag) x = std::sqrt(x);
  return nodal_norm(mag, p);
}

double binom(int n, int k) {
  double r = 1.0;
  for (int q = 1; q <= k; ++q) r = r * (n - k + q) / q;
  return r;
}

std::vector<double> product(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> r(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) r[n] = a[n] * b[n];
  return r;
}

// sum over 0 != beta <= alpha of binom(alpha, beta) D^beta f D^(alpha-beta) g
std::vector<double> commutator(const Cube& F, const Cube& G, const Multi& alpha) {
  std::vector<double> acc(static_cast<std::size_t>(F.n) * F.n * F.n, 0.0);
  for (int a = 0; a <= alpha[0]; ++a)
    for (int b = 0; b <= alpha[1]; ++b)
      for (int c = 0; c <= alpha[2]; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        const double w = binom(alpha[0], a) * binom(alpha[1], b) * binom(alpha[2], c);
        const std::vector<double> df = inverse(derivative(F, {a, b, c}));
        const std::vector<double> dg =
            inverse(derivative(G, {alpha[0] - a, alpha[1] - b, alpha[2] - c}));
        for (std::size_t n = 0; n < acc.size(); ++n) acc[n] += w * df[n] * dg[n];
      }
  return acc;
}

InequalitySample evaluate(InequalityKind kind, const Exponents& e, const Cube& F, const Cube& G) {
  const int n = F.n;
  InequalitySample smp;
  smp.exponents = e;
  const std::vector<double> f = inverse(F);
  const std::vector<double> g = inverse(G);
  switch (kind) {
    case InequalityKind::Cal: {
      const Cube FG = forward(product(f, g), n);
      for (const Multi& a : multi_indices(e.m)) smp.lhs = std::max(smp.lhs, lp(derivative(FG, a), e.q));
      smp.rhs = lp(F, e.r1) * sobolev(G, e.m, e.s1) + lp(G, e.r2) * sobolev(F, e.m, e.s2);
      break;
    }
    case InequalityKind::Come: {
      for (const Multi& a : multi_indices(e.m))
        smp.lhs = std::max(smp.lhs, lp(forward(commutator(F, G, a), n), e.q));
      smp.rhs = grad_norm(F, e.r1) * sobolev(G, e.m - 1, e.s1) + lp(G, e.r2) * sobolev(F, e.m, e.s2);
      break;
    }
    case InequalityKind::AlgMq: {
      const Cube FG = forward(product(f, g), n);
      smp.lhs = sobolev(FG, e.m, e.q);
      smp.rhs = lp(F, kInf) * sobolev(G, e.m, e.q) + lp(G, kInf) * sobolev(F, e.m, e.q);
      break;
    }
    case InequalityKind::AlgHk: {
      const Cube FG = forward(product(f, g), n);
      smp.lhs = sobolev(FG, e.m, 2.0);
      smp.rhs = sobolev(F, e.m, 2.0) * sobolev(G, e.m, 2.0);
      break;
    }
  }
  smp.ratio = smp.rhs > 0.0 ? smp.lhs / smp.rhs : 0.0;
  return smp;
}

Cube random_cube(int n, int band, std::mt19937_64& rng, bool constant) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Cube s(n);
  if (constant) {
    s.c[0] = 1.0 + std::abs(normal(rng));
    return s;
  }
  for (int kz = -band; kz <= band; ++kz)
    for (int ky = -band; ky <= band; ++ky)
      for (int kx = 0; kx <= band; ++kx) {
        const double re = normal(rng), im = normal(rng);
        s.c[s.index(s.slot(kz), s.slot(ky), kx)] = {re, im};
      }
  // kx = 0 plane: c(-ky, -kz) = conj(c(ky, kz)).
  for (int kz = -band; kz <= band; ++kz)
    for (int ky = -band; ky <= band; ++ky) {
      const bool upper = kz > 0 || (kz == 0 && ky > 0);
      if (!upper) continue;
      s.c[s.index(s.slot(-kz), s.slot(-ky), 0)] = std::conj(s.c[s.index(s.slot(kz), s.slot(ky), 0)]);
    }
  s.c[0] = s.c[0].real();
  return s;
}

bool allowed(double p) { return std::isinf(p) || p == 2.0 || p == 3.0 || p == 4.0 || p == 6.0; }

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

}  // namespace

InequalityKind parse_inequality_kind(const std::string& s) {
  if (s == "CAL" || s == "cal") return InequalityKind::Cal;
  if (s == "COME" || s == "come") return InequalityKind::Come;
  if (s == "ALG" || s == "alg" || s == "ALGmq") return InequalityKind::AlgMq;
  if (s == "ALGHk" || s == "alghk") return InequalityKind::AlgHk;
  throw UsageFault("unknown inequality kind '" + s + "'");
}

const char* to_string(InequalityKind k) {
  switch (k) {
    case InequalityKind::Cal: return "CAL";
    case InequalityKind::Come: return "COME";
    case InequalityKind::AlgMq: return "ALGmq";
    case InequalityKind::AlgHk: return "ALGHk";
  }
  return "?";
}

void validate(const Exponents& e, InequalityKind kind) {
  if (e.m < 1 || e.m > 4) throw UsageFault("inequality: m must lie in 1..4");
  for (double p : {e.q, e.r1, e.s1, e.r2, e.s2})
    if (!allowed(p)) throw UsageFault("inequality: exponents must be 2, 3, 4, 6 or inf");
  if (kind == InequalityKind::Cal || kind == InequalityKind::Come) {
    const double tol = 1e-12;
    if (std::abs(inv(e.q) - inv(e.r1) - inv(e.s1)) > tol ||
        std::abs(inv(e.q) - inv(e.r2) - inv(e.s2)) > tol)
      throw UsageFault("inequality: 1/q = 1/r1 + 1/s1 = 1/r2 + 1/s2 violated");
  }
}

InequalitySample evaluate_inequality(InequalityKind kind, const Exponents& e, int n,
                                     const std::vector<double>& f, const std::vector<double>& g) {
  validate(e, kind);
  const std::size_t size = static_cast<std::size_t>(n) * n * n;
  if (f.size() != size || g.size() != size) throw UsageFault("evaluate_inequality: size mismatch");
  return evaluate(kind, e, forward(f, n), forward(g, n));
}

InequalityStats inequality_sample(const InequalityConfig& cfg) {
  validate(cfg.exponents, cfg.kind);
  if (cfg.trials < 1) throw UsageFault("inequality_sample: trials must be positive");
  if (cfg.band_limit < 1) throw UsageFault("inequality_sample: band limit must be positive");
  InequalityStats st;
  st.kind = cfg.kind;
  st.exponents = cfg.exponents;
  st.band_limit = cfg.band_limit;
  st.grid = 2 * (2 * cfg.band_limit + 1);
  st.trials = cfg.trials;
  st.seed = cfg.seed;
  const int n = st.grid;
  st.samples = parallel_map<InequalitySample>(cfg.trials, [&](std::size_t t) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    const Cube F = random_cube(n, cfg.band_limit, rng, cfg.constant_f);
    const Cube G = random_cube(n, cfg.band_limit, rng, false);
    return evaluate(cfg.kind, cfg.exponents, F, G);
  });
  double sum = 0.0;
  for (const auto& s : st.samples) {
    st.max_ratio = std::max(st.max_ratio, s.ratio);
    sum += s.ratio;
  }
  st.mean_ratio = sum / st.samples.size();
  const int bins = std::max(1, cfg.histogram_bins);
  st.histogram.assign(bins, 0);
  for (const auto& s : st.samples) {
    int b = st.max_ratio > 0.0 ? static_cast<int>(s.ratio / st.max_ratio * bins) : 0;
    st.histogram[std::min(b, bins - 1)] += 1;
  }
  return st;
}

}  // namespace cpe
