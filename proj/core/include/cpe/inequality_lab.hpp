#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace cpe {

enum class InequalityKind {
  /// ||D^a(fg)||_q <= C (||f||_r1 ||g||_{W^{m,s1}} + ||g||_r2 ||f||_{W^{m,s2}})
  Cal,
  /// ||[D^a, f] g||_q <= C (||grad f||_r1 ||g||_{W^{m-1,s1}} + ||g||_r2 ||f||_{W^{m,s2}})
  Come,
  /// ||fg||_{W^{m,q}} <= C (||f||_inf ||g||_{W^{m,q}} + ||g||_inf ||f||_{W^{m,q}})
  AlgMq,
  /// ||fg||_{H^m} <= C ||f||_{H^m} ||g||_{H^m}
  AlgHk,
};

InequalityKind parse_inequality_kind(const std::string& s);
const char* to_string(InequalityKind k);

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Exponents (m, q, r1, s1, r2, s2). Lebesgue exponents must be one of
/// 2, 3, 4, 6 or infinity and satisfy 1/q = 1/r1 + 1/s1 = 1/r2 + 1/s2.
struct Exponents {
  int m = 2;
  double q = 2.0;
  double r1 = kInf;
  double s1 = 2.0;
  double r2 = kInf;
  double s2 = 2.0;
};

/// Throws UsageFault when the exponents are unsupported or violate the
/// Hoelder-type balance condition.
void validate(const Exponents& e, InequalityKind kind);

/// One evaluation of an inequality (maximized over |alpha| = m where alpha
/// enters the left-hand side).
struct InequalitySample {
  Exponents exponents;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

struct InequalityStats {
  InequalityKind kind{};
  Exponents exponents;
  int band_limit = 0;
  int grid = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  /// Counts of ratio / max_ratio in [i/bins, (i+1)/bins).
  std::vector<int> histogram;
  std::vector<InequalitySample> samples;
};

struct InequalityConfig {
  InequalityKind kind = InequalityKind::Cal;
  Exponents exponents;
  int trials = 200;
  int band_limit = 8;
  std::uint64_t seed = 1;
  /// Replace f by a constant (the commutator then vanishes identically).
  bool constant_f = false;
  int histogram_bins = 10;
};

/// Draws seeded random real fields f, g on the periodic cube (2 pi)^3 with
/// unit-normal Fourier coefficients for |k_i| <= band_limit and records the
/// ratio lhs / rhs for each trial. Trials use independent generators derived
/// from (seed, trial), so results do not depend on evaluation order.
InequalityStats inequality_sample(const InequalityConfig& cfg);

/// Left and right sides of one inequality for explicit fields given on the
/// cube grid of size n^3 (x fastest). Used for closed-form checks.
InequalitySample evaluate_inequality(InequalityKind kind, const Exponents& e, int n,
                                     const std::vector<double>& f, const std::vector<double>& g);

}  // namespace cpe
