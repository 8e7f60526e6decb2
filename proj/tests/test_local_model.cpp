#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "orthochart/chart.hpp"
#include "orthochart/errors.hpp"
#include "orthochart/local_model.hpp"
#include "orthochart/poly_text.hpp"
#include "orthochart/prime_field.hpp"

using namespace orthochart;

namespace {

using FPoly = Polynomial<PrimeField>;
using Model = LocalModel<PrimeField>;

const PrimeField kField(32003);

std::vector<std::pair<int, int>> all_charts(int max_d) {
  std::vector<std::pair<int, int>> out;
  for (int d = 5; d <= max_d; ++d) {
    for (int l = 2; l < d - 1; ++l) out.emplace_back(d, l);
  }
  return out;
}

// Fraction-free Gaussian elimination on an integer matrix.
long long bareiss_det(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

long long gram_det_at(const GramPair& g, long long u) {
  const auto n = static_cast<std::size_t>(g.G0.rows());
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = g.G0(i, j) + u * g.G1(i, j);
  }
  return bareiss_det(m);
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

FPoly parse(const std::string& text, const RingPtr<PrimeField>& ring) { return parse_polynomial(text, ring); }

}  // namespace

TEST_CASE("gram matrices of (6,3)") {
  const auto g = gram_matrices(6, 3);
  // 1-based (i,j) -> 0-based
  const auto g0 = [&](int i, int j) { return g.G0(i - 1, j - 1); };
  const auto g1 = [&](int i, int j) { return g.G1(i - 1, j - 1); };
  CHECK(g0(1, 6) == 1);
  CHECK(g0(6, 1) == 1);
  CHECK(g1(2, 5) == 1);
  CHECK(g1(5, 2) == 1);
  CHECK(g1(3, 3) == 1);
  CHECK(g0(4, 4) == 1);
  CHECK(g0(3, 4) == 0);
  CHECK(g1(3, 4) == 0);
  CHECK(g.G0.sum() + g.G1.sum() == 6);
}

TEST_CASE("gram matrices of (6,2) and (5,3)") {
  const auto a = gram_matrices(6, 2);
  CHECK(a.G1(2, 3) == 1);
  CHECK(a.G1(3, 2) == 1);
  CHECK(a.G1.sum() == 2);
  CHECK(a.G0(0, 5) == 1);
  const auto b = gram_matrices(5, 3);
  CHECK(b.G1(1, 3) == 1);
  CHECK(b.G1(2, 2) == 1);
  CHECK(b.G1(3, 1) == 1);
  CHECK(b.G0(0, 4) == 1);
}

TEST_CASE("gram matrices: symmetric, a permutation pattern, det = +-pi^l") {
  for (const auto& [d, l] : all_charts(10)) {
    CAPTURE(d);
    CAPTURE(l);
    const auto g = gram_matrices(d, l);
    CHECK(g.G0 == g.G0.transpose());
    CHECK(g.G1 == g.G1.transpose());
    CHECK((g.G0.array() * g.G1.array()).sum() == 0);
    const Eigen::MatrixXi s = g.G0 + g.G1;
    CHECK((s * s).isIdentity());
    // det(G0 + u G1) has degree <= d in u, so d+2 sample points pin it down.
    const long long sign = gram_det_at(g, 1);
    REQUIRE((sign == 1 || sign == -1));
    for (long long u = 0; u <= d + 1; ++u) CHECK(gram_det_at(g, u) == sign * ipow(u, l));
  }
}

TEST_CASE("chart shape") {
  for (const auto& [d, l] : all_charts(10)) {
    CAPTURE(d);
    CAPTURE(l);
    const ChartPresentation c(d, l);
    CHECK(c.Z().size() == static_cast<std::size_t>(l));
    CHECK(c.Z().size() + c.Zc().size() == static_cast<std::size_t>(d));
    CHECK(c.reduced_variables().size() == static_cast<std::size_t>(l * (d - l) + 1));
    CHECK(c.reduced_variables().back() == "pi");
    CHECK(c.full_variables().size() == static_cast<std::size_t>(d * d + 1));
    CHECK(c.eliminated_count() + static_cast<std::size_t>(l * (d - l)) == static_cast<std::size_t>(d * d));
    CHECK(c.same_parity() == (d % 2 == l % 2));
    const int expect = (l == 2 || d - l == 2) ? 3 : 2;
    CHECK(c.expected_components() == expect);
    for (int i : c.Zc()) CHECK(c.sigma0(c.sigma0(i)) == i);
    for (int i : c.Z()) CHECK(c.sigma1(c.sigma1(i)) == i);
    for (int i = 1; i <= d; ++i) CHECK(c.in_Z(i) == (std::count(c.Z().begin(), c.Z().end(), i) == 1));
  }
  CHECK(ChartPresentation(6, 2).id() == "(6,2)");
  CHECK(to_string(ChartPresentation(6, 3).parity()) == "EO");
  CHECK(to_string(ChartPresentation(5, 2).parity()) == "OE");
  CHECK(to_string(ChartPresentation(7, 3).parity()) == "OO");
  CHECK(ChartPresentation(6, 2).Z() == std::vector<int>{3, 4});
  CHECK(ChartPresentation(6, 3).Z() == std::vector<int>{2, 3, 5});
}

TEST_CASE("chart range") {
  CHECK_THROWS_AS(ChartPresentation(4, 2), InvalidChart);
  CHECK_THROWS_AS(ChartPresentation(6, 1), InvalidChart);
  CHECK_THROWS_AS(ChartPresentation(6, 5), InvalidChart);
  CHECK_THROWS_AS(ChartPresentation(6, 6), InvalidChart);
  CHECK_NOTHROW(ChartPresentation(5, 2));
  CHECK_NOTHROW(ChartPresentation(5, 3));
}

TEST_CASE("naive generators of (6,2)") {
  const Model m(ChartPresentation(6, 2), kField);
  CHECK(m.naive_generators().size() == 333);
  const auto& ring = m.full_ring();
  CHECK(m.isotropy_relation()(0, 0) == parse("2*x[3][1]*x[4][1] + 2*x[6][1]", ring));
  CHECK(m.trace_A_relation() == parse("x[3][3] + x[4][4] + 2*pi", ring));
  CHECK(m.trace_X() == parse("x[1][1] + x[2][2] + x[3][3] + x[4][4] + x[5][5] + x[6][6]", ring));
  CHECK(m.intermediate_generators().size() < m.full_ideal().generators().size());
}

TEST_CASE("generators vanish at the origin") {
  for (const auto& [d, l] : all_charts(7)) {
    CAPTURE(d);
    CAPTURE(l);
    const Model m(ChartPresentation(d, l), kField);
    for (const auto& g : m.reduced_generators()) CHECK(kField.is_zero(g.constant_term()));
    if (d > 6) continue;
    for (const auto& g : m.full_ideal().generators()) CHECK(kField.is_zero(g.constant_term()));
  }
}

TEST_CASE("reduced ideal sizes") {
  for (const auto& [d, l] : all_charts(9)) {
    CAPTURE(d);
    CAPTURE(l);
    const Model m(ChartPresentation(d, l), kField);
    const std::size_t minors = static_cast<std::size_t>(l * (l - 1) / 2 * (d - l) * (d - l - 1) / 2);
    CHECK(m.reduced_minors().size() == minors);
    CHECK(m.reduced_generators().size() == minors + 1);
    CHECK(m.reduced_ring()->num_variables() == static_cast<std::size_t>(l * (d - l) + 1));
  }
}

TEST_CASE("trace generators") {
  const auto gen = [](int d, int l) {
    const Model m(ChartPresentation(d, l), kField);
    return std::make_pair(m.reduced_trace_generator(), m.reduced_ring());
  };
  auto [a, ra] = gen(6, 2);
  CHECK(a == parse("x[3][1]*x[4][6] + x[3][2]*x[4][5] + pi", ra));
  auto [b, rb] = gen(5, 3);
  CHECK(b == parse("x[2][1]*x[4][5] + 1/2*x[3][1]*x[3][5] + pi", rb));
  auto [c, rc] = gen(5, 2);
  CHECK(c == parse("x[2][1]*x[4][5] + 1/2*x[2][3]*x[4][3] + pi", rc));
  auto [e, re] = gen(6, 3);
  CHECK(e == parse("x[2][1]*x[5][6] + 1/2*x[2][4]*x[5][4] + 1/2*x[3][1]*x[3][6] + 1/4*x[3][4]^2 + pi", re));
}

TEST_CASE("phi sends Tr A + 2 pi to twice the trace generator modulo minors") {
  for (const auto& [d, l] : all_charts(7)) {
    CAPTURE(d);
    CAPTURE(l);
    const Model m(ChartPresentation(d, l), kField);
    const auto phi = m.substitution_map();
    const auto two = kField.from_rational(Rational(2));
    const FPoly diff = m.apply_phi(m.trace_A_relation(), phi) - m.reduced_trace_generator().scaled(two);
    CHECK(oracle::in_ideal_bounded(diff, m.reduced_minors(), 2));
  }
}

TEST_CASE("substitution map") {
  const Model m(ChartPresentation(6, 2), kField);
  const auto phi = m.substitution_map();
  CHECK(phi.size() == 37);
  const auto& r = m.reduced_ring();
  CHECK(phi.at("x[1][1]") == parse("-1/2*x[3][1]*x[4][6] - 1/2*x[3][6]*x[4][1]", r));
  CHECK(phi.at("x[3][5]") == parse("x[3][5]", r));
  CHECK(phi.at("pi") == parse("pi", r));
  // A = B2 J B1^t J_Z for same parity
  CHECK(phi.at("x[3][3]") == parse("x[3][5]*x[4][2] + x[3][6]*x[4][1]", r));
}

TEST_CASE("phi solves the row elimination relations") {
  for (const auto& [d, l] : all_charts(6)) {
    CAPTURE(d);
    CAPTURE(l);
    const Model m(ChartPresentation(d, l), kField);
    const auto phi = m.substitution_map();
    for (const auto& g : m.row_elimination_generators()) CHECK(m.apply_phi(g, phi).is_zero());
  }
}

TEST_CASE("eight by eight charts have no full ring") {
  const Model m(ChartPresentation(8, 4), kField);
  CHECK_FALSE(m.has_full_ring());
  CHECK_THROWS_AS(m.full_ring(), InvalidChart);
  CHECK(m.reduced_ring()->num_variables() == 17);
  CHECK(m.components().components.size() == 2);
}

TEST_CASE("intermediate ideal needs same parity") {
  const Model eo(ChartPresentation(6, 3), kField);
  CHECK_THROWS_AS(eo.intermediate_generators(), NotApplicable);
  const Model oe(ChartPresentation(5, 2), kField);
  CHECK_THROWS_AS(oe.intermediate_ideal(), NotApplicable);
  const Model ee(ChartPresentation(6, 2), kField);
  CHECK_NOTHROW(ee.intermediate_ideal());
}

TEST_CASE("fiber specialization") {
  const Model m(ChartPresentation(6, 2), kField);
  const auto I = m.reduced_ideal();
  const auto s = m.specialize_fiber(I, FiberKind::special);
  CHECK_FALSE(s.ring()->variables().contains("pi"));
  CHECK(s.ring()->num_variables() == 8);
  CHECK(s.generators().back() == parse("x[3][1]*x[4][6] + x[3][2]*x[4][5]", s.ring()));
  const auto g = m.specialize_fiber(I, FiberKind::generic);
  CHECK(g.generators().back() == parse("x[3][1]*x[4][6] + x[3][2]*x[4][5] + 1", g.ring()));
  const auto g5 = m.specialize_fiber(I, FiberKind::generic, kField.from_rational(Rational(5)));
  CHECK(g5.generators().back() == parse("x[3][1]*x[4][6] + x[3][2]*x[4][5] + 5", g5.ring()));
  CHECK_THROWS_AS(m.specialize_fiber(I, FiberKind::generic, kField.zero()), InvalidUnit);
  const auto a = m.specialize_fiber(I, FiberKind::arithmetic);
  CHECK(same_ring(a.ring(), I.ring()));
  const auto e = m.specialize_fiber(Ideal<PrimeField>(m.elimination_ring(), {}), FiberKind::special);
  CHECK(e.ring()->order() == MonomialOrder::grlex());
}

TEST_CASE("components of (6,2)") {
  const Model m(ChartPresentation(6, 2), kField);
  const auto fam = m.components();
  REQUIRE(fam.components.size() == 3);
  const auto& r = m.special_ring();
  const auto& [l1, i1, v1] = fam.components[0];
  CHECK(l1 == "I1");
  CHECK(i1.generators().size() == 4);
  for (const char* s : {"x[3][1]", "x[3][2]", "x[3][5]", "x[3][6]"}) CHECK(i1.contains(parse(s, r)));
  CHECK_FALSE(i1.contains(parse("x[4][1]", r)));
  CHECK(v1 == "x[4][1]");
  const auto& i2 = fam.components[1].ideal;
  for (const char* s : {"x[4][1]", "x[4][2]", "x[4][5]", "x[4][6]"}) CHECK(i2.contains(parse(s, r)));
  const auto& i3 = fam.components[2].ideal;
  CHECK(i3.contains(parse("x[3][1]*x[3][6] + x[3][2]*x[3][5]", r)));
  CHECK(i3.contains(parse("x[3][1]*x[4][6] + x[3][2]*x[4][5]", r)));
  const auto special = m.special_fiber_ideal();
  for (const auto& g : special.generators()) {
    for (const auto& c : fam.components) CHECK(c.ideal.contains(g));
  }
}

TEST_CASE("components of (5,2)") {
  const Model m(ChartPresentation(5, 2), kField);
  const auto fam = m.components();
  REQUIRE(fam.components.size() == 3);
  const auto& r = m.special_ring();
  for (const char* s : {"x[2][1]", "x[2][3]", "x[2][5]"}) CHECK(fam.components[0].ideal.contains(parse(s, r)));
  for (const char* s : {"x[4][1]", "x[4][3]", "x[4][5]"}) CHECK(fam.components[1].ideal.contains(parse(s, r)));
  // middle column enters with weight 1/2
  CHECK(fam.components[2].ideal.contains(parse("x[2][1]*x[2][5] + 1/2*x[2][3]^2", r)));
}

TEST_CASE("component counts") {
  for (const auto& [d, l] : all_charts(9)) {
    CAPTURE(d);
    CAPTURE(l);
    const Model m(ChartPresentation(d, l), kField);
    CHECK(m.components().components.size() == static_cast<std::size_t>(m.chart().expected_components()));
  }
}
