#ifndef ORTHOCHART_POLY_TEXT_HPP_
#define ORTHOCHART_POLY_TEXT_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orthochart/polynomial.hpp"
#include "orthochart/rational.hpp"

namespace orthochart {

// Ring-free parse result: each term is a rational coefficient times a list
// of (variable name, exponent) factors.
struct ParsedTerm {
  Rational coefficient;
  std::vector<std::pair<std::string, unsigned>> factors;
};

using ParsedPolynomial = std::vector<ParsedTerm>;

/// Grammar: terms joined by '+'/'-'; a term is a '*'-separated product of
/// coefficients (integer or a/b) and factors name[i][j]...^e.
ParsedPolynomial parse_polynomial_text(std::string_view text);

/// Variables occurring in the inputs, in canonical precedence: indexed names
/// ordered by base name then numerically by indices (so x[i][j] is
/// row-major), other names alphabetically, pi last.
std::vector<std::string> canonical_variable_order(const std::vector<ParsedPolynomial>& polys);
void sort_variables_canonically(std::vector<std::string>& names);

/// Non-empty lines with '#' comments stripped.
std::vector<std::string> read_polynomial_lines(std::istream& in);

template <class F>
Polynomial<F> materialize(const ParsedPolynomial& parsed, const RingPtr<F>& ring) {
  std::vector<Term<F>> terms;
  std::vector<unsigned> exps(ring->num_variables());
  for (const auto& t : parsed) {
    std::fill(exps.begin(), exps.end(), 0U);
    for (const auto& [name, e] : t.factors) {
      const auto idx = ring->variables().index_of(name);
      if (!idx) throw ParseError("unknown variable " + name);
      exps[*idx] += e;
      if (exps[*idx] > kMaxExponent) throw ExponentOverflow();
    }
    terms.push_back({Monomial::from_exponents(exps), ring->field().from_rational(t.coefficient)});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return materialize(parse_polynomial_text(text), ring);
}

}  // namespace orthochart

#endif  // ORTHOCHART_POLY_TEXT_HPP_
