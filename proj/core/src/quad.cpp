#include "hecke/quad.hpp"

#include <cmath>

#include "hecke/arith.hpp"

namespace hecke {

QuadValue::QuadValue(std::uint64_t radicand, Rational rat, Rational irr)
    : radicand_(radicand), rat_(std::move(rat)), irr_(std::move(irr)) {
  if (radicand_ == 0) throw precondition_error("QuadValue: radicand must be positive");
  if (irr_ == 0) {
    radicand_ = 1;
    return;
  }
  const auto [s, core] = square_part(radicand_);
  if (s != 1) {
    irr_ *= Int(s);
    radicand_ = core;
  }
  if (radicand_ == 1) {  // perfect square folds into the rational part
    rat_ += irr_;
    irr_ = 0;
  }
}

int QuadValue::sign() const {
  const int sa = sgn(rat_);
  const int sb = sgn(irr_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against m b^2. Equality is impossible for
  // nonzero parts since sqrt(m) is irrational (m squarefree > 1).
  const Rational a2 = rat_ * rat_;
  const Rational mb2 = Rational(Int(radicand_)) * irr_ * irr_;
  const int c = cmp(a2, mb2);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

bool QuadValue::abs_leq(const Rational& bound) const {
  QuadValue hi = *this;
  hi.rat_ -= bound;
  if (hi.sign() > 0) return false;
  QuadValue lo = *this;
  lo.rat_ += bound;
  return lo.sign() >= 0;
}

QuadValue QuadValue::operator-() const {
  QuadValue r = *this;
  r.rat_ = -r.rat_;
  r.irr_ = -r.irr_;
  return r;
}

QuadValue& QuadValue::operator+=(const QuadValue& o) {
  if (irr_ != 0 && o.irr_ != 0 && radicand_ != o.radicand_)
    throw precondition_error("QuadValue: mixing distinct radicands");
  if (irr_ == 0) radicand_ = o.radicand_;
  rat_ += o.rat_;
  irr_ += o.irr_;
  if (irr_ == 0) radicand_ = 1;
  return *this;
}

QuadValue& QuadValue::operator-=(const QuadValue& o) { return *this += -o; }

QuadValue& QuadValue::operator*=(const QuadValue& o) {
  if (irr_ != 0 && o.irr_ != 0 && radicand_ != o.radicand_)
    throw precondition_error("QuadValue: mixing distinct radicands");
  const std::uint64_t m = (irr_ != 0) ? radicand_ : o.radicand_;
  Rational rat = rat_ * o.rat_ + Rational(Int(m)) * irr_ * o.irr_;
  Rational irr = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(rat);
  irr_ = std::move(irr);
  radicand_ = (irr_ == 0) ? 1 : m;
  return *this;
}

QuadValue& QuadValue::operator/=(const QuadValue& o) {
  if (o.is_zero()) throw precondition_error("QuadValue: division by zero");
  if (o.irr_ == 0) {
    rat_ /= o.rat_;
    irr_ /= o.rat_;
    return *this;
  }
  // Multiply by the conjugate; the norm is a nonzero rational.
  QuadValue conj = o;
  conj.irr_ = -conj.irr_;
  *this *= conj;
  const Rational n = o.norm();
  rat_ /= n;
  irr_ /= n;
  if (irr_ == 0) radicand_ = 1;
  return *this;
}

double QuadValue::to_double() const {
  return rat_.get_d() + irr_.get_d() * std::sqrt(static_cast<double>(radicand_));
}

std::string QuadValue::str() const {
  if (is_rational()) return to_string(rat_);
  return to_string(rat_) + " + " + to_string(irr_) + "*sqrt(" +
         std::to_string(radicand_) + ")";
}

QuadValue QuadValue::sqrt_pow(std::uint64_t m, unsigned long e) {
  if (e % 2 == 0) return QuadValue(pow_int(Int(m), e / 2));
  return QuadValue(m, 0, Rational(pow_int(Int(m), (e - 1) / 2)));
}

}  // namespace hecke
