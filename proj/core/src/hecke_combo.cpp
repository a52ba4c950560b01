#include "hecke/hecke_combo.hpp"

#include <numeric>
#include <utility>

#include "hecke/arith.hpp"

namespace hecke {

HeckeCombo combo_identity() { return combo_single(1); }

HeckeCombo combo_single(std::uint64_t n) {
  HeckeCombo c;
  c.terms[n] = 1;
  return c;
}

HeckeCombo compose(const HeckeCombo& a, const HeckeCombo& b) {
  HeckeCombo out;
  for (const auto& [u, eu] : a.terms) {
    for (const auto& [v, ev] : b.terms) {
      const Int coeff = eu * ev;
      const std::uint64_t g = std::gcd(u, v);
      for (std::uint64_t d : divisors(g)) out.terms[u * v / (d * d)] += coeff;
    }
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

HeckeCombo power_combo(std::uint64_t m, unsigned j) {
  thread_local std::map<std::pair<std::uint64_t, unsigned>, HeckeCombo> cache;
  const auto key = std::make_pair(m, j);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  HeckeCombo c = (j == 0) ? combo_identity()
                          : compose(power_combo(m, j - 1), combo_single(m));
  cache.emplace(key, c);
  return c;
}

QuadValue power_sum(std::uint64_t m, unsigned j, std::uint64_t N, int k,
                    Space space) {
  if (j < 1) throw precondition_error("power_sum: j must be >= 1");
  const HeckeCombo combo = power_combo(m, j);
  QuadValue p;
  for (const auto& [n, e] : combo.terms) {
    // For non-square m, every index of (T'_m)^j is a square times the
    // squarefree core of m when j is odd, and a plain square when j is even;
    // equivalently n * m^(j mod 2) is always a perfect square.
    if (!is_perfect_square(m) &&
        !is_perfect_square(j % 2 == 1 ? n * m : n))
      throw std::logic_error("power_combo parity structure violated");
    p += QuadValue(Rational(e)) * normalized_trace(TraceQuery{n, N, k, space});
  }
  // Parity of the value itself: even j rational, odd j pure sqrt-part.
  if (!is_perfect_square(m)) {
    if (j % 2 == 0 && !p.is_rational())
      throw std::logic_error("even power sum must be rational");
    if (j % 2 == 1 && p.rat() != 0)
      throw std::logic_error("odd power sum must be a pure sqrt multiple");
  }
  return p;
}

}  // namespace hecke
