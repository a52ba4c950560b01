#pragma once

#include <cstdint>
#include <string>

#include "hecke/rational.hpp"

namespace hecke {

/// Exact element a + b*sqrt(m) of Q(sqrt(m)).
///
/// The stored radicand is always squarefree: sqrt(s^2 * m0) is folded into
/// the irrational coefficient at construction, and a perfect-square radicand
/// collapses to a pure rational (radicand 1, irr = 0). This keeps values with
/// different Hecke indices (e.g. sqrt(2) and sqrt(8)) addable whenever they
/// generate the same field.
class QuadValue {
 public:
  QuadValue() : radicand_(1) {}
  QuadValue(Rational rat) : radicand_(1), rat_(std::move(rat)) {}  // NOLINT
  QuadValue(Int i) : radicand_(1), rat_(std::move(i)) {}           // NOLINT
  QuadValue(long i) : radicand_(1), rat_(i) {}                     // NOLINT
  QuadValue(std::uint64_t radicand, Rational rat, Rational irr);

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }
  std::uint64_t radicand() const { return radicand_; }

  bool is_rational() const { return radicand_ == 1; }
  bool is_zero() const { return rat_ == 0 && irr_ == 0; }

  /// Exact sign, decided by rational comparisons only.
  int sign() const;

  /// |*this| <= bound, decided exactly. Requires bound >= 0.
  bool abs_leq(const Rational& bound) const;

  QuadValue operator-() const;
  QuadValue& operator+=(const QuadValue& o);
  QuadValue& operator-=(const QuadValue& o);
  QuadValue& operator*=(const QuadValue& o);
  QuadValue& operator/=(const QuadValue& o);

  friend QuadValue operator+(QuadValue a, const QuadValue& b) { return a += b; }
  friend QuadValue operator-(QuadValue a, const QuadValue& b) { return a -= b; }
  friend QuadValue operator*(QuadValue a, const QuadValue& b) { return a *= b; }
  friend QuadValue operator/(QuadValue a, const QuadValue& b) { return a /= b; }
  friend bool operator==(const QuadValue& a, const QuadValue& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_ &&
           (a.irr_ == 0 || a.radicand_ == b.radicand_);
  }

  /// a^2 - m b^2, the product with the conjugate.
  Rational norm() const { return rat_ * rat_ - Rational(Int(radicand_)) * irr_ * irr_; }

  double to_double() const;

  /// "p/q" when rational, else "a + b*sqrt(m)".
  std::string str() const;

  /// m^(e/2) as an exact QuadValue (rational for even e).
  static QuadValue sqrt_pow(std::uint64_t m, unsigned long e);

 private:
  std::uint64_t radicand_;  // squarefree, >= 1; 1 iff value is rational
  Rational rat_;
  Rational irr_;
};

inline int quad_sign(const QuadValue& v) { return v.sign(); }

}  // namespace hecke
