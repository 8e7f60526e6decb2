#include <doctest.h>

#include <numeric>
#include <random>

#include "orthochart/errors.hpp"
#include "orthochart/prime_field.hpp"
#include "orthochart/rational.hpp"

using namespace orthochart;

namespace {

// Brute-force modular inverse, independent of the extended Euclid code.
std::uint32_t search_inverse(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x) {
    if ((std::uint64_t{a} * x) % p == 1) return x;
  }
  return 0;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(0, 5).denominator() == 1);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int k = 0; k < 300; ++k) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (const Rational& r : {a + b, a * b, a - c}) {
      CHECK(r.denominator() > 0);
      CHECK(gcd(mpz_class(abs(r.numerator())), r.denominator()) == 1);
    }
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("prime field arithmetic") {
  const PrimeField f5(5);
  CHECK(f5.from_integer(2).inverse() == f5.from_integer(3));
  CHECK(f5.from_integer(4) + f5.from_integer(3) == f5.from_integer(2));
  CHECK_THROWS_AS(f5.zero().inverse(), DivisionByZero);
  const PrimeField f7(7);
  CHECK_THROWS_AS(f5.one() + f7.one(), ModulusMismatch);
  CHECK_THROWS_AS(f5.one() * f7.one(), ModulusMismatch);
  CHECK(f5.from_integer(-1).residue() == 4);
}

TEST_CASE("prime field rejects bad moduli") {
  CHECK_THROWS_AS(PrimeField(2), InvalidField);
  CHECK_THROWS_AS(PrimeField(9), InvalidField);
  CHECK_THROWS_AS(PrimeField(1), InvalidField);
  CHECK_NOTHROW(PrimeField(3));
  CHECK_NOTHROW(PrimeField(2147483647u));
}

TEST_CASE("prime field inverses agree with exhaustive search") {
  for (std::uint32_t p : {3u, 5u, 7u, 101u, 997u}) {
    const PrimeField f(p);
    for (std::uint32_t a = 1; a < p; ++a) CHECK(f.from_integer(a).inverse().residue() == search_inverse(a, p));
  }
}

TEST_CASE("prime field axioms and inverse of two") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {3u, 32003u, 2147483647u}) {
    const PrimeField f(p);
    CHECK(f.from_integer(2) * f.from_integer(2).inverse() == f.one());
    std::uniform_int_distribution<std::int64_t> dist(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
    for (int k = 0; k < 200; ++k) {
      const auto a = f.from_integer(dist(rng)), b = f.from_integer(dist(rng)), c = f.from_integer(dist(rng));
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == f.zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
    }
  }
}

TEST_CASE("prime field printing recovers small fractions") {
  const PrimeField f(32003);
  CHECK(f.from_rational(Rational(1, 2)).to_string() == "1/2");
  CHECK(f.from_rational(Rational(-1, 4)).to_string() == "-1/4");
  CHECK(f.from_integer(-7).to_string() == "-7");
  CHECK(f.from_integer(0).to_string() == "0");
  CHECK_THROWS_AS(f.from_rational(Rational(1, 32003)), DivisionByZero);
}
