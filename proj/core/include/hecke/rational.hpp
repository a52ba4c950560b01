#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace hecke {

/// Arbitrary-precision integer. All traces, polynomial coefficients and
/// class-number numerators live here; nothing in the pipeline rounds.
using Int = mpz_class;

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Thrown when a query violates a documented precondition (bad weight,
/// non-coprime index, r beyond the dimension, ...). The message names the
/// violated constraint.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Int& z) { return z.get_str(); }

/// Parses "p/q" or "p" with optional sign. Returns nullopt on garbage.
std::optional<Rational> parse_rational(const std::string& s);

}  // namespace hecke
