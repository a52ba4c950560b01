#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

using std::uint64_t;

/// (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

/// All positive divisors, sorted increasing.
std::vector<uint64_t> divisors(uint64_t n);

uint64_t isqrt_u64(uint64_t n);
bool is_perfect_square(uint64_t n);

/// Largest s with s^2 | n, paired with the squarefree part n / s^2.
std::pair<uint64_t, uint64_t> square_part(uint64_t n);

/// psi(N) = N * prod_{p|N} (1 + 1/p), the index of Gamma_0(N).
uint64_t psi(uint64_t n);

/// New-subspace analogue of psi; multiplicative with
///   p^1 -> p - 1,  p^2 -> p^2 - p - 1,  p^r -> p^(r-3) (p-1)^2 (p+1)  (r >= 3).
uint64_t psi_new(uint64_t n);

/// sigma_j(n), j in {0, 1}.
Int sigma(int j, uint64_t n);

int moebius(uint64_t n);

/// Dirichlet inverse of sigma_0, i.e. (mu * mu).
int beta(uint64_t n);

uint64_t euler_phi(uint64_t n);

/// Hurwitz class number H(n): weighted count of all reduced positive binary
/// quadratic forms of discriminant -n. H(0) = -1/12; zero unless
/// n = 0 or 3 (mod 4). Computed by direct enumeration of reduced forms.
Rational hurwitz_direct(uint64_t n);

/// h_w(D) for a negative discriminant D: weighted class number of *primitive*
/// reduced forms. h_w(-3) = 1/3, h_w(-4) = 1/2. H(n) = sum_f h_w(-n/f^2).
Rational weighted_class_number(long long disc);

/// Hurwitz class number, served from the installed/precomputed table when the
/// index is covered, else by direct enumeration.
Rational hurwitz(uint64_t n);

/// Builds H(0..bound) by enumeration and installs it as the shared table.
void precompute_hurwitz(uint64_t bound);

/// Installs externally supplied values as the shared table (index = n).
/// Light validation only: H(0) = -1/12, zeros at n = 1,2 (mod 4),
/// denominators dividing 6, nonnegative for n > 0. Throws on violation.
void install_hurwitz_table(std::vector<Rational> values);

/// Currently installed table (may be null).
std::shared_ptr<const std::vector<Rational>> hurwitz_table();

/// Parses a table cache file: one "n,value" pair per line, n ascending from 0,
/// value in p/q form. Throws std::runtime_error naming the offending line.
std::vector<Rational> load_hurwitz_table_file(const std::string& path);

}  // namespace hecke
