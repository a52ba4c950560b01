#pragma once

#include <cstdint>

#include "hecke/quad.hpp"
#include "hecke/rational.hpp"

namespace hecke {

enum class Space { full, new_subspace };

/// A trace request Tr T_m on S_k(Gamma_0(N)) (or its new subspace).
/// Valid only for gcd(m, N) = 1 and even k >= 4; k = 2 is refused (the
/// formula acquires an extra term there).
struct TraceQuery {
  std::uint64_t m = 1;
  std::uint64_t N = 1;
  int k = 12;
  Space space = Space::full;

  void validate() const;  // throws precondition_error
};

/// P_k(t, m) = (rho^(k-1) - rhobar^(k-1)) / (rho - rhobar) for the roots of
/// X^2 - tX + m, by the recurrence P_2 = 1, P_3 = t, P_j = t P_{j-1} - m P_{j-2}.
/// Requires t^2 <= 4m and k >= 2.
Int gegenbauer_P(int k, const Int& t, std::uint64_t m);

/// Tr T_m on S_k(SL_2(Z)) via the Hurwitz-class-number form:
///   -(1/2) sum_{t^2 <= 4m} P_k(t,m) H(4m - t^2) - (1/2) sum_{dd'=m} min(d,d')^(k-1).
Int trace_level1(std::uint64_t m, int k);

/// Tr T_m on S_k(Gamma_0(N)), trivial character, gcd(m, N) = 1, even k >= 4.
/// Identity + elliptic + hyperbolic terms; the rational total is asserted to
/// be an integer (a non-integer total means a transcription bug).
Int trace_gamma0(std::uint64_t m, std::uint64_t N, int k);

/// Tr T_m on the new subspace: sum_{M | N} beta(N/M) trace_gamma0(m, M, k).
Int trace_new(std::uint64_t m, std::uint64_t N, int k);

Int trace(const TraceQuery& q);

/// Tr T'_m = Tr T_m / m^((k-1)/2) as an exact QuadValue.
QuadValue normalized_trace(const TraceQuery& q);

/// dim S_k(Gamma_0(N)) (or the new subspace) = Tr T_1; asserted nonnegative.
std::uint64_t dim_cuspforms(std::uint64_t N, int k, Space space = Space::full);

}  // namespace hecke
