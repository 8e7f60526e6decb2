#include "orthochart/rational.hpp"

#include <ostream>

#include "orthochart/errors.hpp"

namespace orthochart {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DivisionByZero();
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = mpz_class(s, 10);
    } else {
      num = mpz_class(s.substr(0, slash), 10);
      den = mpz_class(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + s + "'");
  }
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace orthochart
