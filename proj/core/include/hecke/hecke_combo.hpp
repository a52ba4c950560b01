#pragma once

#include <cstdint>
#include <map>

#include "hecke/quad.hpp"
#include "hecke/trace.hpp"

namespace hecke {

/// Finite integer combination sum e_n * T'_n of normalized Hecke operators.
/// Composition is k-independent in this normalization:
///   T'_u T'_v = sum_{d | gcd(u,v)} T'_{uv/d^2}.
struct HeckeCombo {
  std::map<std::uint64_t, Int> terms;  // index -> positive coefficient

  bool operator==(const HeckeCombo& o) const = default;
};

HeckeCombo combo_identity();
HeckeCombo combo_single(std::uint64_t n);

HeckeCombo compose(const HeckeCombo& a, const HeckeCombo& b);

/// (T'_m)^j by repeated composition; j = 0 gives T'_1. Cached per (m, j).
HeckeCombo power_combo(std::uint64_t m, unsigned j);

/// p_j = Tr (T'_m)^j on the requested space, exact.
/// For non-square m the parity structure (even j rational, odd j pure
/// sqrt-part) is asserted on every evaluation.
QuadValue power_sum(std::uint64_t m, unsigned j, std::uint64_t N, int k,
                    Space space = Space::full);

}  // namespace hecke
