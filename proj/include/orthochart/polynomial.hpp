#ifndef ORTHOCHART_POLYNOMIAL_HPP_
#define ORTHOCHART_POLYNOMIAL_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orthochart/errors.hpp"
#include "orthochart/monomial.hpp"
#include "orthochart/prime_field.hpp"
#include "orthochart/rational.hpp"

namespace orthochart {

/// Coefficient field, variable table and monomial order of a polynomial ring.
template <class F>
class PolyRing {
 public:
  using Field = F;
  using Element = typename F::Element;

  PolyRing(F field, VariableTable vars, MonomialOrder order)
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {
    if (order_.kind == MonomialOrder::Kind::block && order_.block_size > vars_.size()) {
      throw InvalidInput("block order larger than the variable table");
    }
  }

  const F& field() const { return field_; }
  const VariableTable& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t num_variables() const { return vars_.size(); }

  int compare(const Monomial& a, const Monomial& b) const { return orthochart::compare(a, b, order_); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.vars_ == b.vars_;
  }

 private:
  F field_;
  VariableTable vars_;
  MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
RingPtr<F> make_ring(F field, VariableTable vars, MonomialOrder order = MonomialOrder::grlex()) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(vars), order);
}

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grlex()) {
  return make_ring(std::move(field), VariableTable(std::move(names)), order);
}

template <class F>
RingPtr<F> with_order(const RingPtr<F>& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->field(), ring->variables(), order);
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

template <class F>
struct Term {
  Monomial monomial;
  typename F::Element coefficient;
};

/// Sparse polynomial; terms strictly descending in the ring's order, no
/// zero coefficients. A default-constructed polynomial is a zero that is not
/// yet attached to a ring; it adopts the ring of whatever it is combined with.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  using TermType = Term<F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, const Element& c) {
    Polynomial p(std::move(ring));
    if (!F::is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial constant(RingPtr<F> ring, std::int64_t c) {
    const Element e = ring->field().from_integer(c);
    return constant(std::move(ring), e);
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    if (index >= ring->num_variables()) throw InvalidInput("variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(index), ring->field().one()});
    return p;
  }
  static Polynomial variable(RingPtr<F> ring, const std::string& name) {
    const auto idx = ring->variables().index_of(name);
    if (!idx) throw InvalidInput("unknown variable " + name);
    return variable(std::move(ring), *idx);
  }
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, const Element& c) {
    Polynomial p(std::move(ring));
    if (!F::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<TermType> terms) {
    Polynomial p(std::move(ring));
    const PolyRing<F>& R = *p.ring_;
    std::sort(terms.begin(), terms.end(),
              [&R](const TermType& a, const TermType& b) { return R.compare(a.monomial, b.monomial) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
        if (F::is_zero(p.terms_.back().coefficient)) p.terms_.pop_back();
      } else if (!F::is_zero(t.coefficient)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }
  /// Trusts the caller that `terms` is already canonical.
  static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<TermType> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<TermType>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const TermType& leading_term() const { require_nonzero(); return terms_.front(); }
  const Monomial& leading_monomial() const { require_nonzero(); return terms_.front().monomial; }
  const Element& leading_coefficient() const { require_nonzero(); return terms_.front().coefficient; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  std::uint64_t support() const {
    std::uint64_t s = 0;
    for (const auto& t : terms_) s |= t.monomial.support();
    return s;
  }
  bool contains_variable(std::size_t i) const { return (support() >> i) & 1U; }
  bool is_homogeneous() const {
    return terms_.empty() ||
           std::all_of(terms_.begin(), terms_.end(),
                       [&](const TermType& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
  }

  Element constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
    return ring_ ? ring_->field().zero() : Element();
  }

  Polynomial scaled(const Element& c) const {
    Polynomial p(ring_);
    if (F::is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial, t.coefficient * c});
    return p;
  }
  /// c * m * (*this); the order is multiplicative so sortedness is kept.
  Polynomial times_term(const Monomial& m, const Element& c) const {
    Polynomial p(ring_);
    if (F::is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
    return p;
  }
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(-a.field_one()); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const RingPtr<F> ring = common_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(ring);
    if (a.size() == 1) return b.times_term(a.terms_[0].monomial, a.terms_[0].coefficient).with_ring(ring);
    if (b.size() == 1) return a.times_term(b.terms_[0].monomial, b.terms_[0].coefficient).with_ring(ring);
    std::vector<TermType> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
    return from_terms(ring, std::move(out));
  }
  friend Polynomial operator*(const Element& c, const Polynomial& p) { return p.scaled(c); }
  friend Polynomial operator*(const Polynomial& p, const Element& c) { return p.scaled(c); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (!same_ring(a.ring_, b.ring_) || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
        return false;
      }
    }
    return true;
  }

  /// f - c*m*g computed by one merge pass.
  static Polynomial sub_scaled(const Polynomial& f, const Element& c, const Monomial& m, const Polynomial& g) {
    const RingPtr<F> ring = common_ring(f, g);
    Polynomial out(ring);
    if (g.is_zero() || F::is_zero(c)) return f.with_ring(ring);
    out.terms_ = sub_scaled_terms(*ring, std::span<const TermType>(f.terms_), c, m, g.terms_);
    return out;
  }

  // Used by the reducers: mutate in place without copying the ring pointer.
  std::vector<TermType>& mutable_terms() { return terms_; }

  Polynomial with_ring(const RingPtr<F>& ring) const {
    Polynomial p = *this;
    p.ring_ = ring;
    return p;
  }

  static std::vector<TermType> sub_scaled_terms(const PolyRing<F>& R, std::span<const TermType> f, const Element& c,
                                                const Monomial& m, const std::vector<TermType>& g) {
    std::vector<TermType> out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    const Element neg_c = -c;
    Monomial gm;
    if (!g.empty()) gm = g[0].monomial * m;
    while (i < f.size() && j < g.size()) {
      const int cmp = R.compare(f[i].monomial, gm);
      if (cmp > 0) {
        out.push_back(f[i++]);
        continue;
      }
      if (cmp < 0) {
        out.push_back({gm, g[j].coefficient * neg_c});
      } else {
        Element coeff = f[i].coefficient - g[j].coefficient * c;
        if (!F::is_zero(coeff)) out.push_back({gm, std::move(coeff)});
        ++i;
      }
      if (++j < g.size()) gm = g[j].monomial * m;
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].monomial * m, g[j].coefficient * neg_c});
    return out;
  }

 private:
  void require_nonzero() const {
    if (terms_.empty()) throw InvalidInput("leading term of the zero polynomial");
  }
  Element field_one() const { return ring_ ? ring_->field().one() : Element(); }

  static RingPtr<F> common_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_) return b.ring_;
    if (!b.ring_) return a.ring_;
    if (!same_ring(a.ring_, b.ring_)) throw TableMismatch();
    return a.ring_;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    const RingPtr<F> ring = common_ring(a, b);
    if (b.is_zero()) return a.with_ring(ring);
    if (a.is_zero()) return subtract ? (-b).with_ring(ring) : b.with_ring(ring);
    const PolyRing<F>& R = *ring;
    Polynomial out(ring);
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      const int cmp = R.compare(a.terms_[i].monomial, b.terms_[j].monomial);
      if (cmp > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = b.terms_[j++];
        out.terms_.push_back({t.monomial, subtract ? -t.coefficient : t.coefficient});
      } else {
        Element c = subtract ? a.terms_[i].coefficient - b.terms_[j].coefficient
                             : a.terms_[i].coefficient + b.terms_[j].coefficient;
        if (!F::is_zero(c)) out.terms_.push_back({a.terms_[i].monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.size(); ++j) {
      const auto& t = b.terms_[j];
      out.terms_.push_back({t.monomial, subtract ? -t.coefficient : t.coefficient});
    }
    return out;
  }

  RingPtr<F> ring_;
  std::vector<TermType> terms_;
};

template <class F>
Polynomial<F> pow(const Polynomial<F>& base, unsigned e) {
  Polynomial<F> result = Polynomial<F>::constant(base.ring(), base.ring()->field().one());
  Polynomial<F> b = base;
  while (e > 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return result;
}

/// Ring homomorphism defined by variable images; coefficients are fixed.
/// images[i] is the image of source variable i (std::nullopt = unmapped).
template <class F>
Polynomial<F> apply_homomorphism(const Polynomial<F>& f, std::span<const std::optional<Polynomial<F>>> images,
                                 const RingPtr<F>& target) {
  Polynomial<F> result(target);
  if (f.is_zero()) return result;
  const VariableTable& vars = f.ring()->variables();
  // powers[i][k] = images[i]^(k+1), built lazily.
  std::vector<std::vector<Polynomial<F>>> powers(vars.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial<F>& {
    if (i >= images.size() || !images[i]) throw MissingImage(vars.name(i));
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(images[i]->is_zero() ? Polynomial<F>(target) : images[i]->with_ring(target));
    while (cache.size() < e) cache.push_back(cache.back() * cache.front());
    return cache[e - 1];
  };
  std::vector<Term<F>> acc;
  for (const auto& t : f.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(target, t.coefficient);
    for (std::size_t i = 0; i < vars.size() && !term.is_zero(); ++i) {
      const unsigned e = t.monomial.exponent(i);
      if (e != 0) term = term * power_of(i, e);
    }
    acc.insert(acc.end(), term.terms().begin(), term.terms().end());
  }
  return Polynomial<F>::from_terms(target, std::move(acc));
}

/// Substitution by variable name; variables without an entry map to the
/// variable of the same name in `target`.
template <class F>
Polynomial<F> substitute(const Polynomial<F>& f, const std::map<std::string, Polynomial<F>>& images,
                         const RingPtr<F>& target) {
  const VariableTable& vars = f.ring() ? f.ring()->variables() : target->variables();
  std::vector<std::optional<Polynomial<F>>> table(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (auto it = images.find(vars.name(i)); it != images.end()) {
      table[i] = it->second;
    } else if (target->variables().contains(vars.name(i))) {
      table[i] = Polynomial<F>::variable(target, vars.name(i));
    }
  }
  return apply_homomorphism<F>(f, table, target);
}

/// Re-expresses f in `target` by matching variable names; the target may
/// order or extend the variables differently.
template <class F>
Polynomial<F> change_ring(const Polynomial<F>& f, const RingPtr<F>& target) {
  if (!f.ring() || same_ring(f.ring(), target)) return f.with_ring(target);
  const VariableTable& src = f.ring()->variables();
  std::vector<std::size_t> map(src.size(), kMaxVariables);
  const std::uint64_t used = f.support();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (auto j = target->variables().index_of(src.name(i))) {
      map[i] = *j;
    } else if ((used >> i) & 1U) {
      throw MissingImage(src.name(i));
    }
  }
  std::vector<Term<F>> terms;
  terms.reserve(f.size());
  std::vector<unsigned> exps(target->num_variables());
  for (const auto& t : f.terms()) {
    std::fill(exps.begin(), exps.end(), 0U);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.monomial.exponent(i) != 0) exps[map[i]] = t.monomial.exponent(i);
    }
    terms.push_back({Monomial::from_exponents(exps), t.coefficient});
  }
  return Polynomial<F>::from_terms(target, std::move(terms));
}

/// Drops every term that involves a variable outside `kept`; with the
/// default (only "pi" kept) this is evaluation at X = 0.
template <class F>
Polynomial<F> evaluate_at_origin(const Polynomial<F>& f, const std::vector<std::string>& kept = {"pi"}) {
  std::uint64_t keep_mask = 0;
  for (const auto& name : kept) {
    if (auto i = f.ring() ? f.ring()->variables().index_of(name) : std::nullopt) keep_mask |= std::uint64_t{1} << *i;
  }
  std::vector<Term<F>> terms;
  for (const auto& t : f.terms()) {
    if ((t.monomial.support() & ~keep_mask) == 0) terms.push_back(t);
  }
  return Polynomial<F>::from_sorted_terms(f.ring(), std::move(terms));
}

template <class F>
std::string to_string(const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  const VariableTable& vars = f.ring()->variables();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string coeff = F::format(t.coefficient);
    const bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += format_monomial(t.monomial, vars);
    }
  }
  return out;
}

}  // namespace orthochart

#endif  // ORTHOCHART_POLYNOMIAL_HPP_
