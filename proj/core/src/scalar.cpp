#include "ballspace/scalar.hpp"

#include <ostream>
#include <sstream>

namespace ballspace {

namespace {

int rational_sign(const Rational& r) {
  if (r == 0) return 0;
  return r > 0 ? 1 : -1;
}

std::string rational_literal(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace

int ExactScalar::sign() const {
  if (infinite_) return 1;
  const int sr = rational_sign(rat_);
  const int si = rational_sign(irr_);
  if (sr == 0 && si == 0) return 0;
  if (sr >= 0 && si >= 0) return 1;
  if (sr <= 0 && si <= 0) return -1;
  // Mixed signs: the sign of a + b*sqrt2 matches the sign of a^2 - 2 b^2
  // when a > 0, and its negation when a < 0.  a^2 = 2 b^2 cannot happen for
  // rational a, b not both zero.
  const Rational lhs = rat_ * rat_;
  const Rational rhs = 2 * irr_ * irr_;
  if (lhs == rhs) throw std::logic_error("sqrt(2) cannot be rational");
  const bool a_wins = lhs > rhs;
  return (sr > 0) == a_wins ? 1 : -1;
}

int ExactScalar::compare(const ExactScalar& a, const ExactScalar& b) {
  if (a.infinite_ && b.infinite_) return 0;
  if (a.infinite_) return 1;
  if (b.infinite_) return -1;
  ExactScalar diff;
  diff.rat_ = a.rat_ - b.rat_;
  diff.irr_ = a.irr_ - b.irr_;
  return diff.sign();
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  if (a.infinite_ || b.infinite_) return ExactScalar::infinity();
  return ExactScalar(a.rat_ + b.rat_, a.irr_ + b.irr_);
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  if (b.infinite_) throw std::domain_error("subtraction of +infinity is undefined");
  if (a.infinite_) return ExactScalar::infinity();
  return ExactScalar(a.rat_ - b.rat_, a.irr_ - b.irr_);
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.infinite_ || b.infinite_) {
    const ExactScalar& finite = a.infinite_ ? b : a;
    if (finite.is_infinite() || finite.sign() > 0) return ExactScalar::infinity();
    throw std::domain_error("+infinity times a nonpositive value is undefined");
  }
  // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s  with s = sqrt 2.
  return ExactScalar(a.rat_ * b.rat_ + 2 * a.irr_ * b.irr_,
                     a.rat_ * b.irr_ + a.irr_ * b.rat_);
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
  if (b.infinite_) throw std::domain_error("division by +infinity is undefined");
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.infinite_) {
    if (b.sign() > 0) return ExactScalar::infinity();
    throw std::domain_error("+infinity divided by a negative value is undefined");
  }
  // 1 / (c + d s) = (c - d s) / (c^2 - 2 d^2); the denominator vanishes only
  // for c = d = 0 because sqrt 2 is irrational.
  const Rational den = b.rat_ * b.rat_ - 2 * b.irr_ * b.irr_;
  const Rational inv_rat = b.rat_ / den;
  const Rational inv_irr = -b.irr_ / den;
  return a * ExactScalar(inv_rat, inv_irr);
}

ExactScalar operator-(const ExactScalar& a) {
  if (a.infinite_) throw std::domain_error("negation of +infinity is undefined");
  return ExactScalar(-a.rat_, -a.irr_);
}

ExactScalar abs(const ExactScalar& v) { return v.sign() < 0 ? -v : v; }

ExactScalar min(const ExactScalar& a, const ExactScalar& b) { return a <= b ? a : b; }

ExactScalar max(const ExactScalar& a, const ExactScalar& b) { return a >= b ? a : b; }

bool le_neg(const ExactScalar& d, const ExactScalar& phi) {
  if (phi.is_infinite()) return false;
  return d <= -phi;
}

bool lt_neg(const ExactScalar& d, const ExactScalar& phi) {
  if (phi.is_infinite()) return false;
  return d < -phi;
}

std::string to_literal(const ExactScalar& v) {
  if (v.is_infinite()) return "inf";
  const Rational& a = v.rational_part();
  const Rational& b = v.sqrt2_part();
  if (b == 0) return rational_literal(a);
  std::string irr = rational_literal(b < 0 ? Rational(-b) : b) + "*sqrt2";
  if (a == 0) return (b < 0 ? "-" : "") + irr;
  return rational_literal(a) + (b < 0 ? "-" : "+") + irr;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& v) {
  return os << to_literal(v);
}

}  // namespace ballspace
