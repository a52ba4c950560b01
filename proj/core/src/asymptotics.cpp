#include "hecke/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "hecke/arith.hpp"
#include "hecke/charpoly.hpp"

namespace hecke {

const char* space_name(Space s) {
  return s == Space::full ? "full" : "new";
}

namespace {

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int double_factorial_even(unsigned s) {  // (2s)!! = 2s (2s-2) ... 2
  Int r = 1;
  for (unsigned i = 1; i <= s; ++i) r *= 2 * i;
  return r;
}

Rational growth_factor(std::uint64_t m, std::uint64_t N, int k, Space space,
                       bool square) {
  const std::uint64_t Psi =
      space == Space::full ? psi(N) : psi_new(N);
  Rational base = Rational(Int(k - 1)) * Int(Psi) / 12;
  if (square)
    base /= Int(isqrt_u64(m));
  else
    base *= Rational(sigma(1, m)) / Int(m);
  return base;
}

}  // namespace

Rational main_term_square(std::uint64_t m, unsigned r, std::uint64_t N, int k,
                          Space space) {
  if (!is_perfect_square(m))
    throw precondition_error("main_term_square: m must be a perfect square");
  Rational base = growth_factor(m, N, k, space, true);
  Rational pw = 1;
  for (unsigned i = 0; i < r; ++i) pw *= base;
  Rational out = pw / factorial(r);
  return (r % 2 == 0) ? out : -out;
}

QuadValue main_term_nonsquare(std::uint64_t m, unsigned r, std::uint64_t N,
                              int k, Space space, const QuadValue& c1) {
  if (is_perfect_square(m))
    throw precondition_error("main_term_nonsquare: m must be a non-square");
  const unsigned s = r / 2;
  Rational base = growth_factor(m, N, k, space, false);
  Rational pw = 1;
  for (unsigned i = 0; i < s; ++i) pw *= base;
  Rational even_part = pw / double_factorial_even(s);
  if (s % 2 == 1) even_part = -even_part;
  if (r % 2 == 0) return QuadValue(even_part);
  return c1 * QuadValue(even_part);
}

int predicted_sign(std::uint64_t m, unsigned r, int trace_sign) {
  if (is_perfect_square(m)) return (r % 2 == 0) ? 1 : -1;
  const unsigned s = r / 2;
  const int even_sign = (s % 2 == 0) ? 1 : -1;
  if (r % 2 == 0) return even_sign;
  if (trace_sign == 0) return 0;  // indeterminate
  return -even_sign * trace_sign;
}

namespace {

struct CellOutput {
  std::vector<TrendRow> rows;
  std::vector<SkippedCell> skipped;
};

CellOutput evaluate_cell(std::uint64_t m, const std::vector<unsigned>& r_list,
                         std::uint64_t N, int k, Space space) {
  CellOutput out;
  if (std::gcd(m, N) != 1) {
    for (unsigned r : r_list) out.skipped.push_back({m, r, N, k, "not coprime"});
    return out;
  }
  const std::uint64_t dim = dim_cuspforms(N, k, space);
  unsigned r_need = 0;
  for (unsigned r : r_list)
    if (r <= dim) r_need = std::max(r_need, r);
  const bool square_m = is_perfect_square(m);
  CharPolyResult cp;
  if (r_need > 0 || dim == 0) cp = charpoly(m, N, k, space, r_need);

  for (unsigned r : r_list) {
    if (r > dim) {
      out.skipped.push_back({m, r, N, k, "dim < r"});
      continue;
    }
    TrendRow row;
    row.m = m;
    row.r = r;
    row.N = N;
    row.k = k;
    row.space = space;
    row.dim = dim;
    const QuadValue& exact = cp.coeffs[r];
    QuadValue main = square_m
                         ? QuadValue(main_term_square(m, r, N, k, space))
                         : main_term_nonsquare(m, r, N, k, space, cp.coeffs.size() > 1
                                                                      ? cp.coeffs[1]
                                                                      : QuadValue());
    row.exact_value = exact.to_double();
    row.main_term = main.to_double();
    if (main.is_zero()) {
      row.rel_err = exact.is_zero() ? 0.0
                                    : std::numeric_limits<double>::infinity();
    } else {
      QuadValue ratio = exact / main;
      ratio -= QuadValue(Rational(1));
      row.rel_err = std::abs(ratio.to_double());
    }
    row.exact_sign = exact.sign();
    int trace_sign = 0;
    if (!square_m && r % 2 == 1)
      trace_sign = sgn(trace(TraceQuery{m, N, k, space}));
    row.predicted = predicted_sign(m, r, trace_sign);
    row.match = (row.predicted != 0) && (row.exact_sign == row.predicted);
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

TrendReport trend_report(std::uint64_t m, const std::vector<unsigned>& r_list,
                         Range N_range, Range k_range, Space space,
                         unsigned jobs) {
  struct Cell {
    std::uint64_t N;
    int k;
  };
  std::vector<Cell> cells;
  for (std::uint64_t N = N_range.lo; N <= N_range.hi && N_range.hi != 0;
       N += N_range.step)
    for (std::uint64_t k = k_range.lo; k <= k_range.hi; k += k_range.step)
      cells.push_back({N, static_cast<int>(k)});

  std::vector<CellOutput> outputs(cells.size());
  const unsigned nthreads = std::max(1u, jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        outputs[i] = evaluate_cell(m, r_list, cells[i].N, cells[i].k, space);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  // Merge in (m, r, N, k) order: r outer, then the cell grid order.
  TrendReport report;
  std::vector<unsigned> rs = r_list;
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  for (unsigned r : rs) {
    for (const auto& out : outputs) {
      for (const auto& row : out.rows)
        if (row.r == r) report.rows.push_back(row);
      for (const auto& sk : out.skipped)
        if (sk.r == r) report.skipped.push_back(sk);
    }
  }
  return report;
}

}  // namespace hecke
