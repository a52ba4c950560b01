#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

/// Multiset of exact rational roots, all bounded by |x| <= bound.
struct RootMultiset {
  std::vector<Rational> roots;
  Rational bound = 1;
};

/// p_j = sum_i x_i^j for j = 1..r_max.
std::vector<Rational> power_sums_from_roots(const std::vector<Rational>& roots,
                                            unsigned r_max);

/// Monic coefficients c_0..c_{r_max}, computed BOTH by direct product
/// expansion and by Newton recursion on the power sums; the two paths must
/// agree exactly or this throws.
std::vector<Rational> coeffs_from_roots(const std::vector<Rational>& roots,
                                        unsigned r_max);

enum class C1Class { below_zero, above_zero, zero, all_positive, all_negative };

/// The periodic limiting sign string for each root-distribution class:
///   below_zero  "+--++--++--++..."
///   above_zero  "++--++--++--+..."
///   zero        "+0-0+0-0..."
///   all_positive "+-+-+-..."
///   all_negative "++++..."
std::string predicted_pattern(C1Class cls, unsigned length);

/// Coefficients of the monic degree-n Chebyshev polynomial T_n(x)/2^(n-1),
/// c_0..c_n, via the recurrence T_{n+1} = 2x T_n - T_{n-1}.
std::vector<Rational> chebyshev_monic_coeffs(unsigned n);

enum class EnsembleKind {
  uniform,        // independent draws from a symmetric rational grid on [-A, A]
  discrete_pm,    // exactly mirrored pairs +/-A (plus a 0 root when d is odd)
};

/// Deterministic for a given seed; all |x_i| <= A.
RootMultiset sample_symmetric_ensemble(unsigned d, const Rational& A,
                                       std::uint64_t seed, EnsembleKind kind);

struct PatternReport {
  std::size_t degree = 0;
  std::string observed;   // signs of c_0..c_{r_max}
  std::string predicted;
  C1Class c1_class = C1Class::zero;
  Rational quad_mean_sq;  // alpha^2 = p_2 / d, exact
  double quad_mean = 0.0;
  bool match = false;     // observed == predicted over the full string
};

/// Observed vs predicted sign strings, quadratic mean, c_1 classification
/// (one-signed root sets take their dedicated patterns).
PatternReport analyze(const RootMultiset& roots, unsigned r_max);

/// Same report for an externally supplied monic coefficient list (used for
/// Chebyshev, whose roots are not rational).
PatternReport analyze_coeffs(const std::vector<Rational>& coeffs, C1Class cls,
                             const Rational& quad_mean_sq, std::size_t degree);

}  // namespace hecke
