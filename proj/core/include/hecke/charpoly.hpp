#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hecke/hecke_combo.hpp"
#include "hecke/quad.hpp"
#include "hecke/trace.hpp"

namespace hecke {

/// Girard-Newton: c_0 = 1, c_r = (-1/r) sum_{j=1}^r c_{r-j} p_j.
/// power_sums holds p_1..p_(>=r_max); returns c_0..c_{r_max}.
std::vector<QuadValue> newton_coeffs(const std::vector<QuadValue>& power_sums,
                                     unsigned r_max);

struct CharPolyResult {
  TraceQuery query;
  std::uint64_t dim = 0;
  std::vector<QuadValue> coeffs;  // c_0..c_{r_max}, exact
  std::vector<Int> unnormalized;  // a_r with c_r = a_r / m^(r(k-1)/2)
  std::vector<int> signs;         // quad_sign of each c_r
};

/// Coefficients of the characteristic polynomial of T'_m on the requested
/// space, assembled from power sums. r_max defaults to the dimension;
/// r_max > dim is rejected. dim = 0 yields coeffs = [1].
CharPolyResult charpoly(std::uint64_t m, std::uint64_t N, int k,
                        Space space = Space::full,
                        std::optional<unsigned> r_max = std::nullopt);

/// True iff c_r(m, N, k) = 0 exactly.
bool coeff_vanishes(std::uint64_t m, std::uint64_t N, int k, unsigned r,
                    Space space = Space::full);

}  // namespace hecke
