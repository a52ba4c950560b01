#include "hecke/trace.hpp"

#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "hecke/arith.hpp"

namespace hecke {

void TraceQuery::validate() const {
  if (m < 1 || N < 1) throw precondition_error("trace: m and N must be positive");
  if (k % 2 != 0) throw precondition_error("trace: weight k must be even");
  if (k < 4)
    throw precondition_error(
        "trace: weight k must be >= 4 (the k = 2 formula has an extra term "
        "and is not supported)");
  if (std::gcd(m, N) != 1)
    throw precondition_error("trace: m must be coprime to the level N");
}

Int gegenbauer_P(int k, const Int& t, std::uint64_t m) {
  if (k < 2 || k % 2 != 0) throw precondition_error("gegenbauer_P: k must be even >= 2");
  if (t * t > Int(4) * Int(m))
    throw precondition_error("gegenbauer_P: requires t^2 <= 4m");
  Int prev = 0;  // P_1 (consistent with the recurrence)
  Int cur = 1;   // P_2
  for (int j = 3; j <= k; ++j) {
    Int next = t * cur - Int(m) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

// Solutions of x^2 - t x + m = 0 (mod p^e) by level-by-level Hensel lifting.
std::uint64_t count_solutions_pp(long long t, std::uint64_t m, std::uint64_t p,
                                 int e) {
  std::vector<std::uint64_t> sols{0};
  std::uint64_t mod = 1;
  for (int lvl = 0; lvl < e; ++lvl) {
    const std::uint64_t next_mod = mod * p;
    const std::uint64_t tt =
        static_cast<std::uint64_t>(((t % static_cast<long long>(next_mod)) +
                                    static_cast<long long>(next_mod)) %
                                   static_cast<long long>(next_mod));
    const std::uint64_t mm = m % next_mod;
    std::vector<std::uint64_t> next;
    for (std::uint64_t x0 : sols) {
      for (std::uint64_t i = 0; i < p; ++i) {
        const std::uint64_t x = (x0 + i * mod) % next_mod;
        std::uint64_t v = (x * x) % next_mod;
        v = (v + next_mod - (tt * x) % next_mod) % next_mod;
        v = (v + mm) % next_mod;
        if (v == 0) next.push_back(x);
      }
    }
    sols = std::move(next);
    if (sols.empty()) return 0;
    mod = next_mod;
  }
  return sols.size();
}

std::uint64_t count_solutions(long long t, std::uint64_t m, std::uint64_t M) {
  std::uint64_t count = 1;
  for (const auto& [p, e] : factorize(M)) count *= count_solutions_pp(t, m, p, e);
  return count;
}

const Rational& hw_cached(long long disc) {
  thread_local std::map<long long, Rational> cache;
  auto it = cache.find(disc);
  if (it == cache.end())
    it = cache.emplace(disc, weighted_class_number(disc)).first;
  return it->second;
}

// -(the elliptic contribution): (1/2) sum_{t^2 < 4m} P_k(t,m)
//     sum_f h_w((t^2-4m)/f^2) * mu(t, f, N),  with
//     mu = psi(N)/psi(N/g) * #{x mod N*g : x^2-tx+m = 0} / g,  g = (N, f).
// The count over x mod N*g divided by g is the number of residues mod N that
// lift to solutions mod N*g, weighted by their lift multiplicity. Pinned
// against eta-product eigenforms at levels 2, 4, and 9 where g > 1 occurs.
Rational elliptic_term(std::uint64_t m, std::uint64_t N, int k) {
  Rational total = 0;
  const long long tmax = static_cast<long long>(isqrt_u64(4 * m - 1));
  const std::uint64_t psi_N = psi(N);
  for (long long t = -tmax; t <= tmax; ++t) {
    const std::uint64_t D = 4 * m - static_cast<std::uint64_t>(t * t);
    Rational class_sum = 0;
    for (std::uint64_t f = 1; f * f <= D; ++f) {
      if (D % (f * f) != 0) continue;
      const std::uint64_t q = D / (f * f);
      if (q % 4 != 0 && q % 4 != 3) continue;  // -q must be a discriminant
      const std::uint64_t g = std::gcd(N, f);
      const std::uint64_t cnt = count_solutions(t, m, N * g);
      if (cnt == 0) continue;
      const Rational mu = Rational(Int(psi_N)) / Rational(Int(psi(N / g))) *
                          make_rational(Int(cnt), Int(g));
      class_sum += hw_cached(-static_cast<long long>(q)) * mu;
    }
    if (class_sum != 0)
      total += Rational(gegenbauer_P(k, Int(static_cast<long>(t)), m)) * class_sum;
  }
  return total / 2;
}

// -(the hyperbolic contribution): sum over d | m with d <= sqrt(m) of
// d^(k-1) sum_{c | N, (c, N/c) | (m/d - d)} phi((c, N/c)), the d = sqrt(m)
// term at half weight.
Rational hyperbolic_term(std::uint64_t m, std::uint64_t N, int k) {
  Rational total = 0;
  for (std::uint64_t d : divisors(m)) {
    if (d * d > m) break;
    const std::uint64_t diff = m / d - d;
    Int csum = 0;
    for (std::uint64_t c : divisors(N)) {
      const std::uint64_t g = std::gcd(c, N / c);
      if (diff % g == 0) csum += Int(euler_phi(g));
    }
    Rational term = Rational(pow_int(Int(d), k - 1)) * csum;
    if (d * d == m) term /= 2;
    total += term;
  }
  return total;
}

Rational identity_term(std::uint64_t m, std::uint64_t N, int k) {
  if (!is_perfect_square(m)) return 0;
  const Int root(isqrt_u64(m));
  return Rational(pow_int(root, k - 2)) * Int(k - 1) * Int(psi(N)) / 12;
}

Int assert_integral(const Rational& v, const char* what) {
  if (v.get_den() != 1)
    throw std::logic_error(std::string(what) +
                           ": non-integer trace, transcription bug");
  return v.get_num();
}

}  // namespace

Int trace_level1(std::uint64_t m, int k) {
  TraceQuery{m, 1, k, Space::full}.validate();
  Rational elliptic = 0;
  const long long tmax = static_cast<long long>(isqrt_u64(4 * m));
  for (long long t = -tmax; t <= tmax; ++t) {
    const std::uint64_t disc = 4 * m - static_cast<std::uint64_t>(t * t);
    const Rational h = hurwitz(disc);
    if (h != 0) elliptic += Rational(gegenbauer_P(k, Int(static_cast<long>(t)), m)) * h;
  }
  Rational hyperbolic = 0;
  for (std::uint64_t d : divisors(m)) {
    const std::uint64_t dp = m / d;
    hyperbolic += Rational(pow_int(Int(std::min(d, dp)), k - 1));
  }
  return assert_integral(-elliptic / 2 - hyperbolic / 2, "trace_level1");
}

Int trace_gamma0(std::uint64_t m, std::uint64_t N, int k) {
  TraceQuery{m, N, k, Space::full}.validate();
  thread_local std::map<std::tuple<std::uint64_t, std::uint64_t, int>, Int> memo;
  const auto key = std::make_tuple(m, N, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const Rational total = identity_term(m, N, k) - elliptic_term(m, N, k) -
                         hyperbolic_term(m, N, k);
  Int result = assert_integral(total, "trace_gamma0");
  memo.emplace(key, result);
  return result;
}

Int trace_new(std::uint64_t m, std::uint64_t N, int k) {
  TraceQuery{m, N, k, Space::new_subspace}.validate();
  Int total = 0;
  for (std::uint64_t M : divisors(N)) {
    const int b = beta(N / M);
    if (b != 0) total += Int(b) * trace_gamma0(m, M, k);
  }
  return total;
}

Int trace(const TraceQuery& q) {
  return q.space == Space::full ? trace_gamma0(q.m, q.N, q.k)
                                : trace_new(q.m, q.N, q.k);
}

QuadValue normalized_trace(const TraceQuery& q) {
  const Int t = trace(q);
  return QuadValue(Rational(t)) / QuadValue::sqrt_pow(q.m, q.k - 1);
}

std::uint64_t dim_cuspforms(std::uint64_t N, int k, Space space) {
  const Int d = trace(TraceQuery{1, N, k, space});
  if (d < 0) throw std::logic_error("negative dimension, transcription bug");
  return d.get_ui();
}

}  // namespace hecke
