#include "algebroid/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace algebroid {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0)
    throw std::invalid_argument("rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class &value) : value_(value) {
  value_.canonicalize();
}

Rational Rational::from_string(const std::string &text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  if (v.get_den() == 0)
    throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  v.canonicalize();
  return Rational(v);
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::invalid_argument("rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  return value_.get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &q) {
  return os << q.str();
}

} // namespace algebroid
