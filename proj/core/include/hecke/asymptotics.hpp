#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/quad.hpp"
#include "hecke/trace.hpp"

namespace hecke {

/// Main term for perfect-square m:
///   (-1)^r / r! * ((1/sqrt(m)) * (k-1)/12 * Psi)^r,
/// with Psi = psi(N) or psi_new(N) depending on the space. Exact rational.
Rational main_term_square(std::uint64_t m, unsigned r, std::uint64_t N, int k,
                          Space space = Space::full);

/// Main term for non-square m. Even r = 2s gives
///   (-1)^s / (2s)!! * (sigma_1(m)/m * (k-1)/12 * Psi)^s   (rational);
/// odd r = 2s+1 multiplies that quantity by c1.
QuadValue main_term_nonsquare(std::uint64_t m, unsigned r, std::uint64_t N,
                              int k, Space space, const QuadValue& c1);

/// Predicted sign of c_r: square m -> (-1)^r; non-square m, r = 2s -> (-1)^s;
/// non-square m, r = 2s+1 -> (-1)^(s+1) * trace_sign (0 = indeterminate when
/// the trace vanishes).
int predicted_sign(std::uint64_t m, unsigned r, int trace_sign);

struct TrendRow {
  std::uint64_t m = 0;
  unsigned r = 0;
  std::uint64_t N = 0;
  int k = 0;
  Space space = Space::full;
  std::uint64_t dim = 0;
  double exact_value = 0.0;  // presentation only; signs are decided exactly
  double main_term = 0.0;
  double rel_err = 0.0;
  int exact_sign = 0;
  int predicted = 0;  // 0 = indeterminate
  bool match = false;
};

struct SkippedCell {
  std::uint64_t m = 0;
  unsigned r = 0;
  std::uint64_t N = 0;
  int k = 0;
  std::string reason;
};

struct TrendReport {
  std::vector<TrendRow> rows;        // ordered by (m, r, N, k)
  std::vector<SkippedCell> skipped;  // same ordering
};

struct Range {
  std::uint64_t lo = 0, hi = 0, step = 1;  // inclusive
};

/// Compares exact c_r with the theorem main terms over a grid. Cells with
/// dim < r or gcd(m, N) > 1 are recorded as skipped. Deterministic row order
/// regardless of the worker count.
TrendReport trend_report(std::uint64_t m, const std::vector<unsigned>& r_list,
                         Range N_range, Range k_range,
                         Space space = Space::full, unsigned jobs = 1);

const char* space_name(Space s);

}  // namespace hecke
