#include "hecke/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/arith.hpp"

namespace hecke {
namespace oracle {

QSeries QSeries::operator+(const QSeries& o) const {
  const std::size_t n = std::min(order(), o.order());
  QSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) out[i] = c_[i] + o.c_[i];
  return out;
}

QSeries QSeries::operator-(const QSeries& o) const {
  const std::size_t n = std::min(order(), o.order());
  QSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) out[i] = c_[i] - o.c_[i];
  return out;
}

QSeries QSeries::operator*(const QSeries& o) const {
  const std::size_t n = std::min(order(), o.order());
  QSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (o.c_[j] == 0) continue;
      out[i + j] += c_[i] * o.c_[j];
    }
  }
  return out;
}

QSeries QSeries::pow(unsigned e) const {
  QSeries out(order());
  out[0] = 1;
  QSeries base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

QSeries delta_qexp(std::size_t n_terms) {
  if (n_terms < 2) throw precondition_error("delta_qexp: need n_terms >= 2");
  QSeries eta(n_terms);  // prod (1 - q^n), truncated
  eta[0] = 1;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    // multiply by (1 - q^n) in place
    for (std::size_t i = n_terms; i >= n; --i) eta[i] -= eta[i - n];
  }
  QSeries e24 = eta.pow(24);
  QSeries delta(n_terms);
  for (std::size_t i = 1; i <= n_terms; ++i) delta[i] = e24[i - 1];
  return delta;
}

namespace {
Int sigma_pow(unsigned j, std::uint64_t n) {
  Int s = 0;
  for (std::uint64_t d : divisors(n)) s += pow_int(Int(d), j);
  return s;
}
}  // namespace

QSeries eisenstein_qexp(int weight, std::size_t n_terms) {
  if (weight != 4 && weight != 6)
    throw precondition_error("eisenstein_qexp: weight must be 4 or 6");
  QSeries e(n_terms);
  e[0] = 1;
  const long factor = (weight == 4) ? 240 : -504;
  const unsigned j = (weight == 4) ? 3 : 5;
  for (std::size_t n = 1; n <= n_terms; ++n)
    e[n] = Rational(Int(factor) * sigma_pow(j, n));
  return e;
}

std::vector<QSeries> miller_basis(int k, std::size_t n_terms) {
  if (k < 4 || k % 2 != 0)
    throw precondition_error("miller_basis: k must be even >= 4");
  const std::uint64_t d = dim_formula_gamma0(1, k);
  if (d == 0) return {};
  if (n_terms <= d)
    throw precondition_error("miller_basis: truncation too short for echelon");

  const QSeries delta = delta_qexp(n_terms);
  const QSeries e4 = eisenstein_qexp(4, n_terms);
  const QSeries e6 = eisenstein_qexp(6, n_terms);

  std::vector<QSeries> rows;
  for (int a = 1; 12 * a <= k; ++a) {
    const int rem = k - 12 * a;
    for (int b = 0; 4 * b <= rem; ++b) {
      if ((rem - 4 * b) % 6 != 0) continue;
      const int c = (rem - 4 * b) / 6;
      rows.push_back(delta.pow(a) * e4.pow(b) * e6.pow(c));
    }
  }

  // Gaussian elimination to echelon form with pivots q^1..q^d.
  std::vector<QSeries> basis;
  std::vector<std::size_t> pivots;
  for (QSeries row : rows) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (row[pivots[i]] != 0) {
        const Rational factor = row[pivots[i]];
        for (std::size_t j = 0; j <= n_terms; ++j)
          row[j] -= factor * basis[i][j];
      }
    }
    std::size_t lead = 0;
    for (std::size_t j = 1; j <= n_terms; ++j)
      if (row[j] != 0) { lead = j; break; }
    if (lead == 0) continue;  // dependent monomial
    const Rational inv = row[lead];
    for (std::size_t j = 0; j <= n_terms; ++j) row[j] /= inv;
    basis.push_back(std::move(row));
    pivots.push_back(lead);
  }
  // Back-substitute so each basis element has zeros at the other pivots.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || basis[i][pivots[j]] == 0) continue;
      const Rational factor = basis[i][pivots[j]];
      for (std::size_t t = 0; t <= n_terms; ++t)
        basis[i][t] -= factor * basis[j][t];
    }
  }
  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  std::vector<QSeries> out;
  for (std::size_t i : order) out.push_back(basis[i]);
  if (out.size() != d)
    throw std::logic_error("miller_basis: rank mismatch with dimension");
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t p = pivots[order[i]];
    if (p != i + 1)
      throw precondition_error("miller_basis: truncation too short for echelon");
  }
  return out;
}

std::vector<std::vector<Int>> hecke_matrix_level1(std::uint64_t m, int k) {
  const std::uint64_t d = dim_formula_gamma0(1, k);
  if (d == 0) return {};
  const std::size_t n_terms = m * d + 1;
  const auto basis = miller_basis(k, n_terms);
  std::vector<std::vector<Int>> mat(d, std::vector<Int>(d));
  for (std::uint64_t col = 0; col < d; ++col) {
    const QSeries& f = basis[col];
    for (std::uint64_t row = 1; row <= d; ++row) {
      // a_n(T_m f) = sum_{e | gcd(m, n)} e^(k-1) a_{mn/e^2}(f)
      Rational an = 0;
      for (std::uint64_t e : divisors(std::gcd(m, row))) {
        const std::uint64_t idx = m * row / (e * e);
        if (idx > n_terms)
          throw precondition_error("hecke_matrix_level1: truncation shortfall");
        an += Rational(pow_int(Int(e), k - 1)) * f[idx];
      }
      if (an.get_den() != 1)
        throw std::logic_error("hecke_matrix_level1: non-integer entry");
      mat[row - 1][col] = an.get_num();
    }
  }
  return mat;
}

std::vector<Int> matrix_charpoly(const std::vector<std::vector<Int>>& a) {
  const std::size_t n = a.size();
  std::vector<Int> coeffs{1};
  if (n == 0) return coeffs;
  using RMat = std::vector<std::vector<Rational>>;
  RMat M(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = Rational(a[i][j]);
  RMat Mk = M;
  for (std::size_t i = 1; i <= n; ++i) {
    Rational tr = 0;
    for (std::size_t j = 0; j < n; ++j) tr += Mk[j][j];
    Rational ci = -tr / static_cast<long>(i);
    if (ci.get_den() != 1)
      throw std::logic_error("matrix_charpoly: non-integer coefficient");
    coeffs.push_back(ci.get_num());
    if (i == n) break;
    for (std::size_t j = 0; j < n; ++j) Mk[j][j] += ci;
    RMat next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t t = 0; t < n; ++t) {
        if (M[r][t] == 0) continue;
        for (std::size_t c = 0; c < n; ++c) next[r][c] += M[r][t] * Mk[t][c];
      }
    Mk = std::move(next);
  }
  return coeffs;
}

namespace {
int kron_minus1(std::uint64_t p) {
  if (p == 2) return 0;
  return (p % 4 == 1) ? 1 : -1;
}
int kron_minus3(std::uint64_t p) {
  if (p == 3) return 0;
  return (p % 3 == 1) ? 1 : -1;
}
}  // namespace

std::uint64_t dim_formula_gamma0(std::uint64_t N, int k) {
  if (k < 4 || k % 2 != 0)
    throw precondition_error("dim_formula_gamma0: k must be even >= 4");
  const auto fac = factorize(N);
  Int nu2 = 1, nu3 = 1;
  if (N % 4 == 0) nu2 = 0;
  if (N % 9 == 0) nu3 = 0;
  for (const auto& [p, e] : fac) {
    if (nu2 != 0) nu2 *= 1 + kron_minus1(p);
    if (nu3 != 0) nu3 *= 1 + kron_minus3(p);
  }
  Int nu_inf = 0;
  for (std::uint64_t d : divisors(N))
    nu_inf += Int(euler_phi(std::gcd(d, N / d)));

  const Rational km1(Int(k - 1));
  Rational dim = km1 * Int(psi(N)) / 12;
  dim += Rational(nu2) * (Rational(Int(k / 4)) - km1 / 4);
  dim += Rational(nu3) * (Rational(Int(k / 3)) - km1 / 3);
  dim -= Rational(nu_inf) / 2;
  if (dim.get_den() != 1 || sgn(dim) < 0)
    throw std::logic_error("dim_formula_gamma0: non-integer or negative");
  return dim.get_num().get_ui();
}

}  // namespace oracle
}  // namespace hecke
