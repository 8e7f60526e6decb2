#ifndef ORTHOCHART_RATIONAL_HPP_
#define ORTHOCHART_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orthochart {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "a" or "a/b" (optional sign on a).
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  std::string to_string() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// The field of rational numbers as a coefficient domain.
struct RationalField {
  using Element = Rational;

  Element zero() const { return Rational(); }
  Element one() const { return Rational(1); }
  Element from_integer(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Element from_rational(const Rational& q) const { return q; }
  static bool is_zero(const Element& e) { return e.is_zero(); }
  static std::string format(const Element& e) { return e.to_string(); }

  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace orthochart

#endif  // ORTHOCHART_RATIONAL_HPP_
