#ifndef ORTHOCHART_IDEAL_HPP_
#define ORTHOCHART_IDEAL_HPP_

#include <algorithm>
#include <bit>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orthochart/errors.hpp"
#include "orthochart/groebner.hpp"
#include "orthochart/polynomial.hpp"

namespace orthochart {

/// Generator list plus a lazily computed reduced Groebner basis in the
/// ring's own order.
template <class F>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
      detail::require_common_ring(ring_, g);
      if (!g.is_zero()) generators_.push_back(g.with_ring(ring_));
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return generators_; }

  const GroebnerBasis<F>& groebner(const GroebnerOptions& options = {}) const {
    if (!gb_) gb_ = std::make_shared<GroebnerBasis<F>>(buchberger(ring_, generators_, options));
    return *gb_;
  }
  bool has_groebner() const { return gb_ != nullptr; }
  void set_groebner(GroebnerBasis<F> gb) const { gb_ = std::make_shared<GroebnerBasis<F>>(std::move(gb)); }

  bool contains(const Polynomial<F>& f, const GroebnerOptions& options = {}) const {
    return groebner(options).contains(f);
  }

  /// Same ideal re-expressed in `target` (variables matched by name).
  Ideal in_ring(const RingPtr<F>& target) const {
    if (same_ring(target, ring_)) return *this;
    std::vector<Polynomial<F>> gens;
    for (const auto& g : generators_) gens.push_back(change_ring(g, target));
    return Ideal(target, std::move(gens));
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
  mutable std::shared_ptr<GroebnerBasis<F>> gb_;
};

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  if (!same_ring(a.ring(), b.ring())) throw TableMismatch();
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<F>(a.ring(), std::move(gens));
}

/// The ring without `drop`, keeping the remaining variables' precedence.
template <class F>
RingPtr<F> subring_without(const RingPtr<F>& ring, const std::set<std::string>& drop) {
  std::vector<std::string> kept;
  for (const auto& name : ring->variables().names()) {
    if (!drop.count(name)) kept.push_back(name);
  }
  MonomialOrder order = ring->order();
  if (order.kind == MonomialOrder::Kind::block) order = MonomialOrder::grlex();
  return make_ring(ring->field(), VariableTable(std::move(kept)), order);
}

/// I intersected with the subring omitting `drop`, computed with a block
/// order that puts the dropped variables first. The result lives in
/// subring_without(ring, drop).
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::set<std::string>& drop, const GroebnerOptions& options = {}) {
  const VariableTable& vars = I.ring()->variables();
  std::vector<std::string> names;
  for (const auto& name : drop) {
    if (!vars.contains(name)) throw InvalidInput("cannot eliminate unknown variable " + name);
  }
  for (const auto& name : vars.names()) {
    if (drop.count(name)) names.push_back(name);
  }
  const std::size_t k = names.size();
  for (const auto& name : vars.names()) {
    if (!drop.count(name)) names.push_back(name);
  }
  const RingPtr<F> elim = make_ring(I.ring()->field(), VariableTable(names), MonomialOrder::block(k));
  const auto gb = buchberger(elim, I.in_ring(elim).generators(), options);
  const std::uint64_t block_mask = k == 0 ? 0 : (k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  const RingPtr<F> target = subring_without(I.ring(), drop);
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb.basis()) {
    if ((g.support() & block_mask) == 0) kept.push_back(change_ring(g, target));
  }
  Ideal<F> out(target, std::move(kept));
  // The surviving elements are a reduced basis of the elimination ideal for
  // the block order restricted to the subring, which is grlex there.
  if (target->order() == MonomialOrder::grlex()) {
    out.set_groebner(GroebnerBasis<F>(target, detail::reduce_basis(out.generators())));
  }
  return out;
}

/// I ∩ J via t*I + (1-t)*J with t eliminated.
template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J, const GroebnerOptions& options = {}) {
  if (!same_ring(I.ring(), J.ring())) throw TableMismatch();
  std::string t = "t";
  while (I.ring()->variables().contains(t)) t += "_";
  std::vector<std::string> names{t};
  for (const auto& n : I.ring()->variables().names()) names.push_back(n);
  const RingPtr<F> ext = make_ring(I.ring()->field(), VariableTable(names), I.ring()->order());
  const auto tv = Polynomial<F>::variable(ext, 0);
  const auto one = Polynomial<F>::constant(ext, ext->field().one());
  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.generators()) gens.push_back(tv * change_ring(f, ext));
  for (const auto& g : J.generators()) gens.push_back((one - tv) * change_ring(g, ext));
  Ideal<F> result = eliminate(Ideal<F>(ext, std::move(gens)), {t}, options);
  return result.in_ring(I.ring());
}

/// (I : f) = (1/f)(I ∩ (f)).
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Polynomial<F>& f, const GroebnerOptions& options = {}) {
  if (f.is_zero()) throw InvalidInput("ideal quotient by the zero polynomial");
  const Polynomial<F> fr = change_ring(f, I.ring());
  const Ideal<F> K = intersect(I, Ideal<F>(I.ring(), {fr}), options);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : K.generators()) {
    const auto div = multivariate_division(g, std::vector<Polynomial<F>>{fr});
    if (!div.remainder.is_zero()) throw Error("internal: intersection element not divisible by the quotient element");
    gens.push_back(div.quotients.front());
  }
  return Ideal<F>(I.ring(), std::move(gens));
}

template <class F>
struct EqualityResult {
  bool equal = false;
  // When unequal: a reduced basis element of one ideal that is not in the
  // other, and which side it came from ("left" or "right").
  std::optional<Polynomial<F>> witness;
  std::string witness_side;

  explicit operator bool() const { return equal; }
};

/// Compares reduced Groebner bases (in the left ideal's ring).
template <class F>
EqualityResult<F> ideals_equal(const Ideal<F>& I, const Ideal<F>& J, const GroebnerOptions& options = {}) {
  const Ideal<F> Jr = J.in_ring(I.ring());
  const auto& a = I.groebner(options);
  const auto& b = same_ring(J.ring(), I.ring()) ? J.groebner(options) : Jr.groebner(options);
  EqualityResult<F> r;
  if (a.basis() == b.basis()) {
    r.equal = true;
    return r;
  }
  for (const auto& g : a.basis()) {
    if (!b.contains(g)) {
      r.witness = g;
      r.witness_side = "left";
      return r;
    }
  }
  for (const auto& g : b.basis()) {
    if (!a.contains(g)) {
      r.witness = g;
      r.witness_side = "right";
      return r;
    }
  }
  throw Error("internal: reduced bases differ but generate the same ideal");
}

namespace detail {

// Smallest set of variables meeting every support mask (branch and bound).
inline void min_hitting_set(const std::vector<std::uint64_t>& sets, std::uint64_t chosen, unsigned size,
                            unsigned& best) {
  if (size >= best) return;
  const std::uint64_t* pick = nullptr;
  int pick_count = 65;
  for (const auto& s : sets) {
    if ((s & chosen) != 0) continue;
    const int c = std::popcount(s);
    if (c < pick_count) {
      pick_count = c;
      pick = &s;
    }
  }
  if (!pick) {
    best = size;
    return;
  }
  if (size + 1 >= best) return;
  for (std::uint64_t rest = *pick; rest != 0; rest &= rest - 1) {
    const std::uint64_t bit = rest & (~rest + 1);
    min_hitting_set(sets, chosen | bit, size + 1, best);
  }
}

}  // namespace detail

/// Krull dimension of ring/I: the largest set of variables containing the
/// support of no leading monomial, i.e. #vars minus a minimum hitting set
/// of the leading monomial supports.
template <class F>
unsigned krull_dimension(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) throw EmptyVariety();
  std::vector<std::uint64_t> sets;
  for (const auto& m : gb.leading_monomials()) sets.push_back(m.support());
  // Supersets of another support never need to be hit separately.
  std::sort(sets.begin(), sets.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> minimal;
  for (auto s : sets) {
    if (std::none_of(minimal.begin(), minimal.end(), [s](auto m) { return (m & ~s) == 0; })) minimal.push_back(s);
  }
  const auto n = static_cast<unsigned>(gb.ring()->num_variables());
  unsigned best = n + 1;
  detail::min_hitting_set(minimal, 0, 0, best);
  return n - best;
}

template <class F>
unsigned krull_dimension(const Ideal<F>& I, const GroebnerOptions& options = {}) {
  return krull_dimension(I.groebner(options));
}

/// True iff no basis element has leading monomial v^m.
template <class F>
bool pure_power_free(const GroebnerBasis<F>& gb, std::size_t v) {
  const std::uint64_t bit = std::uint64_t{1} << v;
  return std::none_of(gb.basis().begin(), gb.basis().end(),
                      [bit](const Polynomial<F>& g) { return g.leading_monomial().support() == bit; });
}

template <class F>
bool pure_power_free(const GroebnerBasis<F>& gb, const std::string& v) {
  const auto idx = gb.ring()->variables().index_of(v);
  if (!idx) throw InvalidInput("unknown variable " + v);
  return pure_power_free(gb, *idx);
}

/// f is a non-zero-divisor modulo I iff (I : f) = I.
template <class F>
bool is_regular_element(const Ideal<F>& I, const Polynomial<F>& f, const GroebnerOptions& options = {}) {
  if (I.groebner(options).is_unit()) throw EmptyVariety();
  return ideals_equal(ideal_quotient(I, f, options), I, options).equal;
}

}  // namespace orthochart

#endif  // ORTHOCHART_IDEAL_HPP_
