#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ballspace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Element of the field Q(sqrt 2), extended with a single +infinity.
///
/// A finite value is rational_part + sqrt2_part * sqrt(2), both parts kept in
/// canonical reduced form by the underlying rational type.  The infinite value
/// has both parts zero.  Comparison is exact: the sign of a + b*sqrt(2) is
/// resolved by sign analysis of a and b and, in the mixed-sign case, by
/// comparing a^2 with 2 b^2 (equality is impossible for a, b not both zero,
/// since sqrt(2) is irrational).
///
/// +infinity absorbs addition and wins comparisons.  Operations that would
/// produce -infinity (negating or subtracting the infinite value, multiplying
/// it by a nonpositive value) throw std::domain_error.
class ExactScalar {
 public:
  ExactScalar() : rat_(0), irr_(0) {}
  ExactScalar(int v) : rat_(v), irr_(0) {}           // NOLINT(google-explicit-constructor)
  ExactScalar(long v) : rat_(v), irr_(0) {}          // NOLINT(google-explicit-constructor)
  ExactScalar(long long v) : rat_(v), irr_(0) {}     // NOLINT(google-explicit-constructor)
  ExactScalar(Rational r) : rat_(std::move(r)), irr_(0) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational r, Rational s) : rat_(std::move(r)), irr_(std::move(s)) {}

  static ExactScalar infinity() {
    ExactScalar v;
    v.infinite_ = true;
    return v;
  }
  static ExactScalar sqrt2() { return ExactScalar(Rational(0), Rational(1)); }
  static ExactScalar ratio(long long num, long long den) {
    return ExactScalar(Rational(num, den));
  }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && rat_ == 0 && irr_ == 0; }
  /// True for finite values lying in Q (zero sqrt(2) coefficient).
  bool is_rational_value() const { return !infinite_ && irr_ == 0; }

  const Rational& rational_part() const { return rat_; }
  const Rational& sqrt2_part() const { return irr_; }

  /// -1, 0, or +1; the infinite value has sign +1.
  int sign() const;

  /// Three-way comparison, total over the extended domain.
  static int compare(const ExactScalar& a, const ExactScalar& b);

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const ExactScalar& a, const ExactScalar& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const ExactScalar& a, const ExactScalar& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const ExactScalar& a, const ExactScalar& b) {
    return compare(a, b) >= 0;
  }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a);

  ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
  ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }

 private:
  Rational rat_;
  Rational irr_;
  bool infinite_ = false;
};

ExactScalar abs(const ExactScalar& v);
ExactScalar min(const ExactScalar& a, const ExactScalar& b);
ExactScalar max(const ExactScalar& a, const ExactScalar& b);

/// d <= -phi, read with phi possibly +infinity (in which case the answer is
/// false).  d must be finite.  Keeps call sites free of -infinity formation.
bool le_neg(const ExactScalar& d, const ExactScalar& phi);
/// d < -phi under the same convention.
bool lt_neg(const ExactScalar& d, const ExactScalar& phi);

/// Canonical literal: "inf", "0", "3/2", "1*sqrt2", "3/2-1/4*sqrt2", ...
std::string to_literal(const ExactScalar& v);
std::ostream& operator<<(std::ostream& os, const ExactScalar& v);

}  // namespace ballspace
