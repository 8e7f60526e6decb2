#include <doctest.h>

#include <random>
#include <sstream>

#include "orthochart/errors.hpp"
#include "orthochart/poly_matrix.hpp"
#include "orthochart/poly_text.hpp"
#include "orthochart/polynomial.hpp"

using namespace orthochart;

namespace {

using QPoly = Polynomial<RationalField>;
using PPoly = Polynomial<PrimeField>;

RingPtr<RationalField> qring(std::vector<std::string> names, MonomialOrder o = MonomialOrder::grlex()) {
  return make_ring(RationalField{}, std::move(names), o);
}

QPoly P(const std::string& s, const RingPtr<RationalField>& r) { return parse_polynomial(s, r); }

template <class F>
Polynomial<F> random_poly(const RingPtr<F>& ring, std::mt19937_64& rng, int terms, unsigned max_deg) {
  std::uniform_int_distribution<int> coeff(-5, 5), expo(0, static_cast<int>(max_deg));
  std::vector<Term<F>> ts;
  std::vector<unsigned> e(ring->num_variables());
  for (int k = 0; k < terms; ++k) {
    unsigned total = 0;
    for (auto& x : e) {
      x = static_cast<unsigned>(expo(rng));
      if (total + x > max_deg) x = 0;
      total += x;
    }
    ts.push_back({Monomial::from_exponents(e), ring->field().from_integer(coeff(rng))});
  }
  return Polynomial<F>::from_terms(ring, std::move(ts));
}

}  // namespace

TEST_CASE("grlex comparisons") {
  auto r = qring({"x", "y"});
  const auto x2 = Monomial::variable(0, 2), xy = Monomial::variable(0) * Monomial::variable(1),
             y2 = Monomial::variable(1, 2), x = Monomial::variable(0);
  CHECK(compare(x2, xy, r->order()) > 0);
  CHECK(compare(xy, y2, r->order()) > 0);
  CHECK(compare(y2, x, r->order()) > 0);
  CHECK(compare(x, x, r->order()) == 0);
  CHECK(compare(y2, x, MonomialOrder::lex()) < 0);
}

TEST_CASE("block order eliminates the first block") {
  const auto o = MonomialOrder::block(1);
  const auto x = Monomial::variable(0), y3 = Monomial::variable(1, 3), z = Monomial::variable(2);
  CHECK(compare(x, y3, o) > 0);
  CHECK(compare(y3 * z, y3, o) > 0);
  CHECK(compare(Monomial::variable(1) * z, Monomial::variable(1, 2), o) < 0);
}

TEST_CASE("monomial order axioms on random exponents") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned> e(0, 3);
  auto rand_mono = [&] {
    std::vector<unsigned> v(5);
    for (auto& x : v) x = e(rng);
    return Monomial::from_exponents(v);
  };
  for (const auto& o : {MonomialOrder::grlex(), MonomialOrder::lex(), MonomialOrder::block(2)}) {
    for (int k = 0; k < 300; ++k) {
      const auto a = rand_mono(), b = rand_mono(), m = rand_mono();
      const int c = compare(a, b, o);
      CHECK(c == -compare(b, a, o));
      CHECK((c == 0) == (a == b));
      if (a.divides(b)) CHECK(c <= 0);
      if (c < 0) CHECK(compare(a * m, b * m, o) < 0);
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  auto r = qring({"x", "y"});
  const auto x = QPoly::variable(r, "x"), y = QPoly::variable(r, "y");
  CHECK((x + y) * (x - y) == P("x^2 - y^2", r));
  CHECK((x + y - (x + y)).is_zero());
  CHECK((x + y - (x + y)).terms().empty());
  CHECK((x + QPoly::constant(r, 2) * y).scaled(Rational(1, 2)) == P("1/2*x + y", r));
  CHECK(to_string(P("1/2*x + y", r)) == "1/2*x + y");
  CHECK(to_string(P("-x^2*y + 3 - y", r)) == "-x^2*y - y + 3");
  auto other = qring({"y", "x"});
  CHECK_THROWS_AS(x + QPoly::variable(other, "x"), TableMismatch);
}

TEST_CASE("default-constructed zero adopts the other operand's ring") {
  auto r = qring({"x"});
  QPoly z;
  const auto x = QPoly::variable(r, 0);
  CHECK((z + x) == x);
  CHECK((z * x).is_zero());
  CHECK(z == QPoly(r));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(5);
  auto r = make_ring(PrimeField(32003), std::vector<std::string>{"a", "b", "c"});
  for (int k = 0; k < 100; ++k) {
    const auto f = random_poly(r, rng, 4, 3), g = random_poly(r, rng, 4, 3), h = random_poly(r, rng, 3, 2);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f - f == PPoly(r));
  }
}

TEST_CASE("homomorphisms") {
  auto r = qring({"x", "y"});
  const auto one = QPoly::constant(r, 1);
  std::map<std::string, QPoly> to_y1{{"x", P("y + 1", r)}};
  CHECK(substitute(P("x^2", r), to_y1, r) == P("y^2 + 2*y + 1", r));
  CHECK(substitute(P("x*y", r), {{"x", QPoly(r)}}, r).is_zero());
  const auto f = P("3*x^2*y - x + 7", r);
  CHECK(substitute(f, {}, r) == f);

  std::vector<std::optional<QPoly>> partial{P("y", r), std::nullopt};
  CHECK_THROWS_AS(apply_homomorphism<RationalField>(P("x*y", r), partial, r), MissingImage);
  CHECK(apply_homomorphism<RationalField>(P("x^3", r), partial, r) == P("y^3", r));
}

TEST_CASE("homomorphisms are multiplicative on random samples") {
  std::mt19937_64 rng(9);
  auto src = make_ring(PrimeField(32003), std::vector<std::string>{"a", "b"});
  auto dst = make_ring(PrimeField(32003), std::vector<std::string>{"u", "v", "w"});
  for (int k = 0; k < 50; ++k) {
    std::vector<std::optional<PPoly>> images{random_poly(dst, rng, 3, 2), random_poly(dst, rng, 3, 2)};
    const auto f = random_poly(src, rng, 3, 2), g = random_poly(src, rng, 3, 2);
    const auto phi = [&](const PPoly& p) { return apply_homomorphism<PrimeField>(p, images, dst); };
    CHECK(phi(f * g) == phi(f) * phi(g));
    CHECK(phi(f + g) == phi(f) + phi(g));
  }
}

TEST_CASE("evaluation at the origin keeps pi") {
  auto r = qring({"x[3][1]", "x[4][6]", "pi"});
  CHECK(evaluate_at_origin(P("x[3][1]*x[4][6] + 2*pi", r)) == P("2*pi", r));
  CHECK(evaluate_at_origin(P("5", r)) == P("5", r));
  CHECK(evaluate_at_origin(P("x[3][1] + 1", r)).constant_term() == Rational(1));
}

TEST_CASE("change of ring matches variables by name") {
  auto a = qring({"x", "y"});
  auto b = qring({"y", "z", "x"}, MonomialOrder::lex());
  const auto f = P("x^2 + x*y + 3", a);
  const auto g = change_ring(f, b);
  CHECK(g == P("x^2 + y*x + 3", b));
  CHECK(change_ring(g, a) == f);
  CHECK_THROWS_AS(change_ring(P("z", b), a), MissingImage);
}

TEST_CASE("text grammar") {
  auto r = qring({"x[3][1]", "x[4][1]", "x[6][1]", "pi"});
  const auto f = P("2*x[3][1]*x[4][1] + 2*x[6][1]", r);
  CHECK(f.size() == 2);
  CHECK(to_string(f) == "2*x[3][1]*x[4][1] + 2*x[6][1]");
  CHECK(P("-1/2*x[ 3 ][1]^2 - pi", r) == P("- pi - 1/2 * x[3][1]*x[3][1]", r));
  CHECK_THROWS_AS(P("x[3][1] +", r), ParseError);
  CHECK_THROWS_AS(P("y", r), ParseError);
  CHECK_THROWS_AS(P("x[3][1] ** 2", r), ParseError);
  CHECK_THROWS_AS(P("", r), ParseError);
}

TEST_CASE("canonical variable order is row-major with pi last") {
  const std::vector<ParsedPolynomial> polys{parse_polynomial_text("pi + x[10][2] + x[2][10]"),
                                            parse_polynomial_text("x[2][3]*x[1][4]")};
  CHECK(canonical_variable_order(polys) ==
        std::vector<std::string>{"x[1][4]", "x[2][3]", "x[2][10]", "x[10][2]", "pi"});
}

TEST_CASE("line reader strips comments") {
  std::istringstream in("# header\nx + 1  # trailing\n\n   \ny\n");
  CHECK(read_polynomial_lines(in) == std::vector<std::string>{"x + 1  ", "y"});
}

TEST_CASE("matrix helpers") {
  auto r = qring({"a", "b", "c", "d"});
  PolyMatrix<RationalField> m(2, 2);
  m << P("a", r), P("b", r), P("c", r), P("d", r);
  CHECK(trace(m) == P("a + d", r));
  const auto sq = product(m, m);
  CHECK(sq(0, 1) == P("a*b + b*d", r));
  CHECK(product(m.transpose(), m)(0, 0) == P("a^2 + c^2", r));
  const auto mins = minors2(m);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0] == P("a*d - b*c", r));
  CHECK(entries(m).size() == 4);
  Eigen::MatrixXi j(2, 2);
  j << 0, 1, 1, 0;
  CHECK(product(m, lift(j, r))(0, 0) == P("b", r));
  const PolyMatrix<RationalField> sum = m + m;
  CHECK(sum(1, 1) == P("2*d", r));
}
