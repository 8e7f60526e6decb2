#include "orthochart/prime_field.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

#include "orthochart/errors.hpp"

namespace orthochart {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// Extended Euclid; returns x with a*x = 1 (mod p).
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return reduce(t0, p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t modulus)
    : residue_(reduce(value, modulus)), modulus_(modulus) {}

void PrimeFieldElement::check_same_field(const PrimeFieldElement& o) const {
  if (modulus_ != o.modulus_) throw ModulusMismatch(modulus_, o.modulus_);
}

PrimeFieldElement& PrimeFieldElement::operator+=(const PrimeFieldElement& o) {
  check_same_field(o);
  std::uint64_t s = std::uint64_t{residue_} + o.residue_;
  if (s >= modulus_) s -= modulus_;
  residue_ = static_cast<std::uint32_t>(s);
  return *this;
}

PrimeFieldElement& PrimeFieldElement::operator-=(const PrimeFieldElement& o) {
  check_same_field(o);
  residue_ = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + (modulus_ - o.residue_);
  return *this;
}

PrimeFieldElement& PrimeFieldElement::operator*=(const PrimeFieldElement& o) {
  check_same_field(o);
  residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} * o.residue_) % modulus_);
  return *this;
}

PrimeFieldElement& PrimeFieldElement::operator/=(const PrimeFieldElement& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

PrimeFieldElement operator-(const PrimeFieldElement& a) {
  PrimeFieldElement r = a;
  if (r.residue_ != 0) r.residue_ = r.modulus_ - r.residue_;
  return r;
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (residue_ == 0) throw DivisionByZero();
  PrimeFieldElement r;
  r.modulus_ = modulus_;
  r.residue_ = inverse_mod(residue_, modulus_);
  return r;
}

std::string PrimeFieldElement::to_string() const {
  const auto p = static_cast<std::int64_t>(modulus_);
  const std::int64_t symmetric = residue_ > modulus_ / 2 ? residue_ - p : residue_;
  const auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(p) / 2.0));
  if (std::llabs(symmetric) <= bound) return std::to_string(symmetric);

  // Rational reconstruction: stop the remainder sequence once it drops
  // below the bound, then accept if the cofactor is also small.
  std::int64_t r0 = p, r1 = residue_, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 != 0 && std::llabs(t1) <= bound) {
    std::int64_t num = r1, den = t1;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t a = std::llabs(num), b = den;
    while (b != 0) {
      const std::int64_t t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) {
      return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
  }
  return std::to_string(symmetric);
}

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a) { return os << a.to_string(); }

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2) throw InvalidField("characteristic 2 is not supported");
  if (p > (1u << 31) || !is_prime(p)) {
    throw InvalidField("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

PrimeFieldElement PrimeField::from_rational(const Rational& q) const {
  const mpz_class num = q.numerator() % p_;
  const mpz_class den = q.denominator() % p_;
  const Element d(den.get_si(), p_);
  if (d.is_zero()) throw DivisionByZero();
  return Element(num.get_si(), p_) / d;
}

}  // namespace orthochart
