#ifndef ORTHOCHART_PRIME_FIELD_HPP_
#define ORTHOCHART_PRIME_FIELD_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "orthochart/rational.hpp"

namespace orthochart {

/// Residue class modulo an odd prime. The modulus travels with the value so
/// that mixing fields is caught at the operation, not silently reduced.
class PrimeFieldElement {
 public:
  PrimeFieldElement() = default;
  PrimeFieldElement(std::int64_t value, std::uint32_t modulus);

  std::uint32_t residue() const { return residue_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  PrimeFieldElement inverse() const;

  PrimeFieldElement& operator+=(const PrimeFieldElement& o);
  PrimeFieldElement& operator-=(const PrimeFieldElement& o);
  PrimeFieldElement& operator*=(const PrimeFieldElement& o);
  PrimeFieldElement& operator/=(const PrimeFieldElement& o);

  friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
  friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
  friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
  friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }
  friend PrimeFieldElement operator-(const PrimeFieldElement& a);

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a.residue_ == b.residue_ && a.modulus_ == b.modulus_;
  }

  /// Shortest fraction a/b with |a|, b <= sqrt(p/2) mapping to this residue,
  /// or the symmetric integer representative when none exists.
  std::string to_string() const;

 private:
  void check_same_field(const PrimeFieldElement& o) const;

  std::uint32_t residue_ = 0;
  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a);

inline constexpr std::uint32_t kDefaultModulus = 32003;

bool is_prime(std::uint64_t n);

/// GF(p) for an odd prime p < 2^31.
class PrimeField {
 public:
  using Element = PrimeFieldElement;

  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  Element zero() const { return Element(0, p_); }
  Element one() const { return Element(1, p_); }
  Element from_integer(std::int64_t v) const { return Element(v, p_); }
  Element from_rational(const Rational& q) const;
  static bool is_zero(const Element& e) { return e.is_zero(); }
  static std::string format(const Element& e) { return e.to_string(); }

  std::uint64_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace orthochart

#endif  // ORTHOCHART_PRIME_FIELD_HPP_
