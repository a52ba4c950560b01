#include "hecke/charpoly.hpp"

#include "hecke/arith.hpp"

namespace hecke {

std::vector<QuadValue> newton_coeffs(const std::vector<QuadValue>& power_sums,
                                     unsigned r_max) {
  if (power_sums.size() < r_max)
    throw precondition_error("newton_coeffs: need p_1..p_r for r_max = r");
  std::vector<QuadValue> c(r_max + 1);
  c[0] = QuadValue(Rational(1));
  for (unsigned r = 1; r <= r_max; ++r) {
    QuadValue acc;
    for (unsigned j = 1; j <= r; ++j) acc += c[r - j] * power_sums[j - 1];
    c[r] = acc / QuadValue(Rational(-static_cast<long>(r)));
  }
  return c;
}

CharPolyResult charpoly(std::uint64_t m, std::uint64_t N, int k, Space space,
                        std::optional<unsigned> r_max_opt) {
  const TraceQuery query{m, N, k, space};
  query.validate();
  CharPolyResult res;
  res.query = query;
  res.dim = dim_cuspforms(N, k, space);
  const unsigned r_max = r_max_opt.value_or(static_cast<unsigned>(res.dim));
  if (r_max > res.dim)
    throw precondition_error("charpoly: r_max exceeds the dimension");

  std::vector<QuadValue> p;
  p.reserve(r_max);
  for (unsigned j = 1; j <= r_max; ++j)
    p.push_back(power_sum(m, j, N, k, space));
  res.coeffs = newton_coeffs(p, r_max);

  const bool square_m = is_perfect_square(m);
  res.unnormalized.reserve(r_max + 1);
  res.signs.reserve(r_max + 1);
  for (unsigned r = 0; r <= r_max; ++r) {
    const QuadValue& c = res.coeffs[r];
    if (!square_m) {
      // Theorem structure: even-index coefficients rational, odd-index pure.
      if (r % 2 == 0 && !c.is_rational())
        throw std::logic_error("even coefficient must be rational");
      if (r % 2 == 1 && c.rat() != 0)
        throw std::logic_error("odd coefficient must be a pure sqrt multiple");
    }
    const QuadValue a =
        c * QuadValue::sqrt_pow(m, static_cast<unsigned long>(r) * (k - 1));
    if (!a.is_rational() || a.rat().get_den() != 1)
      throw std::logic_error("unnormalized coefficient must be an integer");
    res.unnormalized.push_back(a.rat().get_num());
    res.signs.push_back(c.sign());
    if (c.sign() != sgn(res.unnormalized.back()))
      throw std::logic_error("sign mismatch between c_r and a_r");
  }
  return res;
}

bool coeff_vanishes(std::uint64_t m, std::uint64_t N, int k, unsigned r,
                    Space space) {
  const auto res = charpoly(m, N, k, space, r);
  return res.coeffs[r].is_zero();
}

}  // namespace hecke
