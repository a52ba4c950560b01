#pragma once

#include <cstdint>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {
namespace oracle {

/// Truncated q-series with exact rational coefficients a_0..a_n.
/// Ring operations keep the common truncation order.
class QSeries {
 public:
  explicit QSeries(std::size_t order) : c_(order + 1) {}
  QSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}  // NOLINT

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries pow(unsigned e) const;

 private:
  std::vector<Rational> c_;
};

/// Delta = q prod_{n>=1} (1 - q^n)^24; coefficient of q^m is tau(m).
QSeries delta_qexp(std::size_t n_terms);

/// E_4 = 1 + 240 sum sigma_3(n) q^n,  E_6 = 1 - 504 sum sigma_5(n) q^n.
QSeries eisenstein_qexp(int weight, std::size_t n_terms);

/// Echelonized basis f_1..f_d of S_k(SL_2(Z)), f_i = q^i + O(q^(d+1)),
/// from monomials Delta^a E4^b E6^c with a >= 1. Throws if n_terms is too
/// short to echelonize (n_terms must exceed the dimension).
std::vector<QSeries> miller_basis(int k, std::size_t n_terms);

/// Integer matrix of T_m on the Miller basis, via
/// a_n(T_m f) = sum_{d | gcd(m,n)} d^(k-1) a_{mn/d^2}(f).
/// Requires and checks truncation n_terms >= m*d + 1 internally.
std::vector<std::vector<Int>> hecke_matrix_level1(std::uint64_t m, int k);

/// Monic characteristic polynomial coefficients [1, c_1, ..., c_d] of an
/// integer matrix, det(xI - A), by the Faddeev-LeVerrier scheme (divisions
/// are exact; integrality of the output is asserted).
std::vector<Int> matrix_charpoly(const std::vector<std::vector<Int>>& a);

/// Classical dimension formula for S_k(Gamma_0(N)), even k >= 4, using the
/// elliptic-point and cusp counts nu_2, nu_3, nu_inf and the index psi(N).
std::uint64_t dim_formula_gamma0(std::uint64_t N, int k);

}  // namespace oracle
}  // namespace hecke
