#ifndef ALGEBROID_RATIONAL_HPP
#define ALGEBROID_RATIONAL_HPP

#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace algebroid {

/// Arbitrary-precision rational number in canonical reduced form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long numerator) : value_(numerator) {}
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class &value);

  /// Parses "n", "-n" or "n/d". Throws std::invalid_argument on bad input.
  static Rational from_string(const std::string &text);

  const mpz_class &numerator() const { return value_.get_num(); }
  const mpz_class &denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational &a, const Rational &b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational &a, const Rational &b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational &a, const Rational &b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational &a, const Rational &b) { return a.value_ >= b.value_; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  /// "n" when the denominator is 1, otherwise "n/d".
  std::string str() const;

  const mpq_class &raw() const { return value_; }

private:
  mpq_class value_; // kept canonical by construction
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

} // namespace algebroid

#endif
