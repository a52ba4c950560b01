#include "hecke/signlab.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hecke/charpoly.hpp"
#include "hecke/quad.hpp"

namespace hecke {

std::vector<Rational> power_sums_from_roots(const std::vector<Rational>& roots,
                                            unsigned r_max) {
  std::vector<Rational> p(r_max, Rational(0));
  for (const Rational& x : roots) {
    Rational pw = 1;
    for (unsigned j = 0; j < r_max; ++j) {
      pw *= x;
      p[j] += pw;
    }
  }
  return p;
}

namespace {

// Coefficients of prod (x - x_i), leading first.
std::vector<Rational> coeffs_by_expansion(const std::vector<Rational>& roots,
                                          unsigned r_max) {
  std::vector<Rational> c{Rational(1)};
  for (const Rational& x : roots) {
    c.push_back(0);
    for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] -= x * c[j - 1];
  }
  c.resize(std::min<std::size_t>(c.size(), r_max + 1), Rational(0));
  c.resize(r_max + 1, Rational(0));
  return c;
}

}  // namespace

std::vector<Rational> coeffs_from_roots(const std::vector<Rational>& roots,
                                        unsigned r_max) {
  const auto direct = coeffs_by_expansion(roots, r_max);

  const unsigned r_eff = std::min<unsigned>(r_max, roots.size());
  const auto p = power_sums_from_roots(roots, r_eff);
  std::vector<QuadValue> pq(p.begin(), p.end());
  const auto via_newton = newton_coeffs(pq, r_eff);

  for (unsigned r = 0; r <= r_eff; ++r) {
    if (!via_newton[r].is_rational() || via_newton[r].rat() != direct[r])
      throw std::logic_error(
          "coeffs_from_roots: product expansion and Newton recursion disagree");
  }
  return direct;
}

std::string predicted_pattern(C1Class cls, unsigned length) {
  if (length < 1) throw precondition_error("predicted_pattern: length >= 1");
  std::string out;
  out.reserve(length);
  for (unsigned r = 0; r < length; ++r) {
    const unsigned s = r / 2;
    const char even_sign = (s % 2 == 0) ? '+' : '-';
    char ch;
    if (cls == C1Class::all_positive) {
      ch = (r % 2 == 0) ? '+' : '-';
    } else if (cls == C1Class::all_negative) {
      ch = '+';
    } else if (r % 2 == 0) {
      ch = even_sign;
    } else {
      switch (cls) {
        case C1Class::below_zero: ch = (s % 2 == 0) ? '-' : '+'; break;
        case C1Class::above_zero: ch = (s % 2 == 0) ? '+' : '-'; break;
        default: ch = '0'; break;
      }
    }
    out.push_back(ch);
  }
  return out;
}

std::vector<Rational> chebyshev_monic_coeffs(unsigned n) {
  // T_{j+1} = 2x T_j - T_{j-1}; coefficient vectors are leading-first.
  std::vector<Int> prev{1};     // T_0
  std::vector<Int> cur{1, 0};   // T_1
  if (n == 0) return {Rational(1)};
  for (unsigned j = 2; j <= n; ++j) {
    std::vector<Int> next(j + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] = 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i)
      next[i + 2] -= prev[i];  // degrees align at the tail
    prev = std::move(cur);
    cur = std::move(next);
  }
  const Int lead = cur[0];
  std::vector<Rational> out;
  out.reserve(cur.size());
  for (const Int& a : cur) out.push_back(Rational(a) / lead);
  return out;
}

RootMultiset sample_symmetric_ensemble(unsigned d, const Rational& A,
                                       std::uint64_t seed, EnsembleKind kind) {
  if (d < 1) throw precondition_error("ensemble: degree must be >= 1");
  std::mt19937_64 rng(seed);
  RootMultiset out;
  out.bound = A;
  out.roots.reserve(d);
  constexpr std::uint64_t kGrid = 1000;
  auto grid_draw = [&]() -> Rational {
    // integer in [-kGrid, kGrid], portable across library implementations
    const std::uint64_t u = rng() % (2 * kGrid + 1);
    return Rational(static_cast<long>(u) - static_cast<long>(kGrid)) /
           static_cast<long>(kGrid) * A;
  };
  switch (kind) {
    case EnsembleKind::uniform:
      for (unsigned i = 0; i < d; ++i) out.roots.push_back(grid_draw());
      break;
    case EnsembleKind::discrete_pm:
      for (unsigned i = 0; i + 1 < d; i += 2) {
        out.roots.push_back(A);
        out.roots.push_back(-A);
      }
      if (d % 2 == 1) out.roots.push_back(0);
      break;
  }
  return out;
}

PatternReport analyze_coeffs(const std::vector<Rational>& coeffs, C1Class cls,
                             const Rational& quad_mean_sq, std::size_t degree) {
  PatternReport rep;
  rep.degree = degree;
  rep.c1_class = cls;
  rep.quad_mean_sq = quad_mean_sq;
  rep.quad_mean = std::sqrt(quad_mean_sq.get_d());
  for (const Rational& c : coeffs) {
    const int s = sgn(c);
    rep.observed.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
  }
  rep.predicted = predicted_pattern(cls, coeffs.size());
  rep.match = rep.observed == rep.predicted;
  return rep;
}

PatternReport analyze(const RootMultiset& roots, unsigned r_max) {
  if (r_max > roots.roots.size())
    throw precondition_error("analyze: r_max exceeds the degree");
  const auto coeffs = coeffs_from_roots(roots.roots, r_max);
  const auto& xs = roots.roots;
  C1Class cls;
  const bool any = !xs.empty();
  if (any && std::all_of(xs.begin(), xs.end(),
                         [](const Rational& x) { return x > 0; })) {
    cls = C1Class::all_positive;
  } else if (any && std::all_of(xs.begin(), xs.end(),
                                [](const Rational& x) { return x < 0; })) {
    cls = C1Class::all_negative;
  } else {
    Rational p1 = 0;
    for (const Rational& x : xs) p1 += x;
    // c_1 = -p_1, so positive root sum means c_1 sits below zero.
    cls = (p1 == 0) ? C1Class::zero
                    : (p1 > 0 ? C1Class::below_zero : C1Class::above_zero);
  }
  Rational p2 = 0;
  for (const Rational& x : xs) p2 += x * x;
  const Rational alpha_sq =
      xs.empty() ? Rational(0) : p2 / static_cast<long>(xs.size());
  return analyze_coeffs(coeffs, cls, alpha_sq, xs.size());
}

}  // namespace hecke
