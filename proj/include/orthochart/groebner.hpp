#ifndef ORTHOCHART_GROEBNER_HPP_
#define ORTHOCHART_GROEBNER_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "orthochart/errors.hpp"
#include "orthochart/polynomial.hpp"

namespace orthochart {

template <class F>
struct DivisionResult {
  std::vector<Polynomial<F>> quotients;
  Polynomial<F> remainder;
};

namespace detail {

template <class F>
void require_common_ring(const RingPtr<F>& ring, const Polynomial<F>& p) {
  if (p.ring() && !same_ring(ring, p.ring())) throw TableMismatch();
}

// Leading monomials of a divisor list with support masks for a quick
// rejection before the exponent-wise test.
template <class F>
class DivisorIndex {
 public:
  void add(const Polynomial<F>* p) {
    polys_.push_back(p);
    masks_.push_back(p->leading_monomial().support());
  }
  std::size_t size() const { return polys_.size(); }
  const Polynomial<F>& operator[](std::size_t i) const { return *polys_[i]; }

  // First divisor whose leading monomial divides m, or size().
  std::size_t find(const Monomial& m) const {
    const std::uint64_t s = m.support();
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if ((masks_[i] & ~s) == 0 && polys_[i]->leading_monomial().divides(m)) return i;
    }
    return polys_.size();
  }

 private:
  std::vector<const Polynomial<F>*> polys_;
  std::vector<std::uint64_t> masks_;
};

// Reduces f by the divisors. With full = false only leading terms are
// reduced. on_step(index, multiplier_monomial, coefficient) fires for every
// elimination step.
template <class F, class OnStep>
Polynomial<F> reduce(const Polynomial<F>& f, const DivisorIndex<F>& divs, bool full, OnStep&& on_step) {
  using TermT = Term<F>;
  const RingPtr<F>& ring = f.ring();
  if (f.is_zero()) return f;
  const PolyRing<F>& R = *ring;
  std::vector<TermT> work = f.terms();
  std::vector<TermT> rem;
  std::size_t start = 0;
  while (start < work.size()) {
    const TermT& lead = work[start];
    const std::size_t k = divs.find(lead.monomial);
    if (k == divs.size()) {
      if (!full) break;
      rem.push_back(lead);
      ++start;
      continue;
    }
    const Polynomial<F>& g = divs[k];
    const Monomial mult = lead.monomial / g.leading_monomial();
    const typename F::Element c = lead.coefficient / g.leading_coefficient();
    on_step(k, mult, c);
    work = Polynomial<F>::sub_scaled_terms(R, std::span<const TermT>(work).subspan(start), c, mult, g.terms());
    start = 0;
  }
  rem.insert(rem.end(), work.begin() + static_cast<std::ptrdiff_t>(start), work.end());
  return Polynomial<F>::from_sorted_terms(ring, std::move(rem));
}

struct ZTerm {
  Monomial monomial;
  mpz_class coefficient;
};

// Integer terms proportional to `terms`: denominators cleared, content
// removed. Returns the factor: integer terms = factor * terms.
inline mpq_class integer_terms(const std::vector<Term<RationalField>>& terms, std::vector<ZTerm>& out) {
  mpz_class den = 1, content = 0;
  for (const auto& t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.denominator().get_mpz_t());
  out.clear();
  out.reserve(terms.size());
  for (const auto& t : terms) {
    out.push_back({t.monomial, t.coefficient.numerator() * (den / t.coefficient.denominator())});
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().coefficient.get_mpz_t());
  }
  if (content != 0 && content != 1) {
    for (auto& t : out) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), content.get_mpz_t());
  }
  return mpq_class(den, content == 0 ? mpz_class(1) : content);
}

inline mpz_class remove_content(std::vector<ZTerm>& terms) {
  mpz_class g = 0;
  for (const auto& t : terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) return g;
  }
  if (g == 0) return 1;
  for (auto& t : terms) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), g.get_mpz_t());
  return g;
}

// Remainder of f over Q computed with integer coefficients: each step
// replaces w by b*w - a*m*g with a/b the cancelling ratio, then strips the
// content. With `exact` the scale is tracked as num/den and divided out at
// the end, so the result equals the one of reduce(); otherwise the result
// is the primitive integer multiple.
template <class OnStep>
Polynomial<RationalField> fraction_free_remainder(const Polynomial<RationalField>& f,
                                                  const DivisorIndex<RationalField>& divs, bool full,
                                                  OnStep&& on_step, bool exact) {
  if (f.is_zero()) return f;
  const PolyRing<RationalField>& R = *f.ring();
  std::vector<ZTerm> work;
  const mpq_class initial = integer_terms(f.terms(), work);
  mpz_class num = initial.get_num(), den = initial.get_den();
  std::vector<std::vector<ZTerm>> zdivs(divs.size());
  std::vector<ZTerm> next;
  std::size_t start = 0;
  while (start < work.size()) {
    const std::size_t k = divs.find(work[start].monomial);
    if (k == divs.size()) {
      if (!full) break;
      ++start;
      continue;
    }
    if (zdivs[k].empty()) integer_terms(divs[k].terms(), zdivs[k]);
    const std::vector<ZTerm>& g = zdivs[k];
    const Monomial mult = work[start].monomial / g.front().monomial;
    on_step(k, mult);
    mpz_class a = work[start].coefficient, b = g.front().coefficient, d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
    const bool scale = b != 1;
    const auto take = [&](std::size_t i) {
      if (scale) work[i].coefficient *= b;
      return ZTerm{work[i].monomial, std::move(work[i].coefficient)};
    };

    next.clear();
    next.reserve(work.size() + g.size());
    for (std::size_t i = 0; i < start; ++i) next.push_back(take(i));
    std::size_t i = start + 1, j = 1;
    Monomial gm;
    if (j < g.size()) gm = g[j].monomial * mult;
    while (i < work.size() && j < g.size()) {
      const int cmp = R.compare(work[i].monomial, gm);
      if (cmp > 0) {
        next.push_back(take(i++));
        continue;
      }
      if (cmp < 0) {
        next.push_back({gm, -(g[j].coefficient * a)});
      } else {
        ZTerm t = take(i++);
        mpz_submul(t.coefficient.get_mpz_t(), g[j].coefficient.get_mpz_t(), a.get_mpz_t());
        if (t.coefficient != 0) next.push_back(std::move(t));
      }
      if (++j < g.size()) gm = g[j].monomial * mult;
    }
    for (; i < work.size(); ++i) next.push_back(take(i));
    for (; j < g.size(); ++j) next.push_back({g[j].monomial * mult, -(g[j].coefficient * a)});
    std::swap(work, next);
    const mpz_class content = remove_content(work);
    if (exact) {
      num *= b;
      den *= content;
    }
  }
  std::vector<Term<RationalField>> terms;
  terms.reserve(work.size());
  if (!exact) {
    for (auto& t : work) terms.push_back({t.monomial, Rational(mpq_class(t.coefficient))});
    return Polynomial<RationalField>::from_sorted_terms(f.ring(), std::move(terms));
  }
  mpq_class factor(num, den);
  factor.canonicalize();
  for (auto& t : work) terms.push_back({t.monomial, Rational(mpq_class(t.coefficient) / factor)});
  return Polynomial<RationalField>::from_sorted_terms(f.ring(), std::move(terms));
}

// reduce() without the quotient coefficients; on_step(index, multiplier).
// Without `exact` the result is only determined up to a nonzero scalar.
template <class F, class OnStep>
Polynomial<F> remainder(const Polynomial<F>& f, const DivisorIndex<F>& divs, bool full, OnStep&& on_step,
                        bool exact = true) {
  if constexpr (std::is_same_v<F, RationalField>) {
    return fraction_free_remainder(f, divs, full, on_step, exact);
  } else {
    return reduce(f, divs, full, [&](std::size_t k, const Monomial& m, const auto&) { on_step(k, m); });
  }
}

inline constexpr auto kNoStep = [](std::size_t, const Monomial&) {};

}  // namespace detail

/// Classic division: f = sum q_i f_i + r, trying divisors in list order.
template <class F>
DivisionResult<F> multivariate_division(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors) {
  DivisionResult<F> result;
  detail::DivisorIndex<F> index;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw InvalidDivisor();
    if (f.ring()) detail::require_common_ring(f.ring(), g);
    index.add(&g);
  }
  const RingPtr<F> ring = f.ring() ? f.ring() : (divisors.empty() ? RingPtr<F>() : divisors.front().ring());
  std::vector<std::vector<Term<F>>> quotient_terms(divisors.size());
  const Polynomial<F> f_in_ring = f.with_ring(ring);
  result.remainder = detail::reduce(f_in_ring, index, true, [&](std::size_t k, const Monomial& m, const auto& c) {
    quotient_terms[k].push_back({m, c});
  });
  for (auto& q : quotient_terms) result.quotients.push_back(Polynomial<F>::from_sorted_terms(ring, std::move(q)));
  return result;
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidInput("S-polynomial of a zero polynomial");
  detail::require_common_ring(f.ring(), g);
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial<F> a = f.times_term(l / f.leading_monomial(), f.leading_coefficient().inverse());
  return Polynomial<F>::sub_scaled(a, g.leading_coefficient().inverse(), l / g.leading_monomial(), g);
}

enum class PairSelection { sugar, normal, fifo, random };

struct GroebnerOptions {
  PairSelection selection = PairSelection::sugar;
  std::uint64_t seed = 0;
  // Zero means unlimited.
  std::chrono::milliseconds time_limit{0};
  std::size_t max_pairs = 0;
  bool use_criteria = true;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;
  std::size_t max_basis_size = 0;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted by descending
/// leading monomial.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {
    for (const auto& g : basis_) index_.add(&g);
  }
  GroebnerBasis(const GroebnerBasis& o) : GroebnerBasis(o.ring_, o.basis_) {}
  GroebnerBasis& operator=(const GroebnerBasis& o) {
    if (this != &o) *this = GroebnerBasis(o.ring_, o.basis_);
    return *this;
  }
  GroebnerBasis(GroebnerBasis&&) = default;
  GroebnerBasis& operator=(GroebnerBasis&&) = default;

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial<F>>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }
  bool is_zero_ideal() const { return basis_.empty(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis_) out.push_back(g.leading_monomial());
    return out;
  }

  Polynomial<F> normal_form(const Polynomial<F>& f) const {
    detail::require_common_ring(ring_, f);
    return detail::remainder(f.with_ring(ring_), index_, true, detail::kNoStep);
  }
  bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.basis_ == b.basis_;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> basis_;
  detail::DivisorIndex<F> index_;
};

namespace detail {

template <class F>
std::vector<Polynomial<F>> reduce_basis(std::vector<Polynomial<F>> polys) {
  if (polys.empty()) return polys;
  const PolyRing<F>& R = *polys.front().ring();
  std::sort(polys.begin(), polys.end(), [&R](const Polynomial<F>& a, const Polynomial<F>& b) {
    return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial<F>> minimal;
  for (const auto& p : polys) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial<F>& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(p.monic());
  }
  std::vector<Polynomial<F>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    DivisorIndex<F> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.add(&minimal[j]);
    }
    const auto& terms = minimal[i].terms();
    const Polynomial<F> tail =
        Polynomial<F>::from_sorted_terms(minimal[i].ring(), std::vector<Term<F>>(terms.begin() + 1, terms.end()));
    const Polynomial<F> lead = Polynomial<F>::from_sorted_terms(minimal[i].ring(), {terms.front()});
    reduced.push_back(lead + remainder(tail, others, true, kNoStep));
  }
  std::reverse(reduced.begin(), reduced.end());
  return reduced;
}

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller criteria (which contain
/// the coprime leading monomial criterion). Input generators enter through
/// the pair queue so they are processed in selection order as well.
template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& generators,
                            const GroebnerOptions& options = {}, GroebnerStats* stats = nullptr) {
  constexpr std::size_t kInput = std::numeric_limits<std::size_t>::max();
  struct Entry {
    Polynomial<F> poly;
    unsigned sugar;
  };
  struct Pair {
    std::size_t i, j;  // j == kInput: generator i of the input
    Monomial lcm;
    unsigned sugar;
    std::size_t serial;
  };
  const PolyRing<F>& R = *ring;
  GroebnerStats local_stats;
  GroebnerStats& st = stats ? *stats : local_stats;

  std::vector<Polynomial<F>> inputs;
  for (const auto& g : generators) {
    detail::require_common_ring(ring, g);
    if (!g.is_zero()) inputs.push_back(g.with_ring(ring));
  }

  std::vector<Entry> store;
  std::vector<std::size_t> basis;
  std::vector<Pair> pairs;
  std::size_t serial = 0;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    pairs.push_back({k, kInput, inputs[k].leading_monomial(), inputs[k].total_degree(), serial++});
  }

  const auto lm = [&](std::size_t k) -> const Monomial& { return store[k].poly.leading_monomial(); };

  const auto update = [&](std::size_t h) {
    const Monomial& lh = lm(h);
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> cand;
    for (std::size_t g : basis) cand.push_back({g, Monomial::lcm(lh, lm(g)), Monomial::coprime(lh, lm(g))});
    std::vector<Pair> fresh;
    if (options.use_criteria) {
      std::vector<Candidate> kept;
      std::vector<bool> alive(cand.size(), true);
      for (std::size_t a = 0; a < cand.size(); ++a) {
        alive[a] = false;
        bool dominated = false;
        if (!cand[a].coprime) {
          for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
            if (alive[b] && cand[b].lcm.divides(cand[a].lcm)) dominated = true;
          }
          for (std::size_t b = 0; b < kept.size() && !dominated; ++b) {
            if (kept[b].lcm.divides(cand[a].lcm)) dominated = true;
          }
        }
        if (!dominated) kept.push_back(cand[a]);
        else ++st.pairs_skipped;
      }
      std::erase_if(pairs, [&](const Pair& p) {
        if (p.j == kInput || !lh.divides(p.lcm)) return false;
        const bool drop = !(Monomial::lcm(lm(p.i), lh) == p.lcm) && !(Monomial::lcm(lm(p.j), lh) == p.lcm);
        if (drop) ++st.pairs_skipped;
        return drop;
      });
      for (const auto& c : kept) {
        if (c.coprime) {
          ++st.pairs_skipped;
          continue;
        }
        fresh.push_back({c.g, h, c.lcm, 0, 0});
      }
    } else {
      for (const auto& c : cand) fresh.push_back({c.g, h, c.lcm, 0, 0});
    }
    for (auto& p : fresh) {
      const unsigned lcm_deg = p.lcm.degree();
      p.sugar = std::max(store[p.i].sugar + lcm_deg - lm(p.i).degree(), store[h].sugar + lcm_deg - lh.degree());
      p.serial = serial++;
      pairs.push_back(std::move(p));
    }
    if (options.use_criteria) {
      std::erase_if(basis, [&](std::size_t g) { return lh.divides(lm(g)); });
    }
    basis.push_back(h);
    st.max_basis_size = std::max(st.max_basis_size, basis.size());
  };

  std::mt19937_64 rng(options.seed);
  const auto started = std::chrono::steady_clock::now();
  const auto pick = [&]() -> std::size_t {
    if (options.selection == PairSelection::random) {
      return std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng);
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      bool better = false;
      switch (options.selection) {
        case PairSelection::sugar:
          if (a.sugar != b.sugar) {
            better = a.sugar < b.sugar;
            break;
          }
          [[fallthrough]];
        case PairSelection::normal: {
          const int c = R.compare(a.lcm, b.lcm);
          better = c != 0 ? c < 0 : a.serial < b.serial;
          break;
        }
        default:
          better = a.serial < b.serial;
      }
      if (better) best = k;
    }
    return best;
  };

  const auto check_clock = [&] {
    if (options.time_limit.count() > 0 && std::chrono::steady_clock::now() - started > options.time_limit) {
      throw Timeout("Groebner basis exceeded the time limit of " + std::to_string(options.time_limit.count()) +
                    " ms after " + std::to_string(st.pairs_reduced) + " pairs");
    }
  };

  bool unit = false;
  while (!pairs.empty() && !unit) {
    if (options.max_pairs != 0 && st.pairs_reduced >= options.max_pairs) {
      throw Timeout("Groebner basis exceeded the budget of " + std::to_string(options.max_pairs) + " pairs");
    }
    check_clock();
    const std::size_t k = pick();
    const Pair pair = pairs[k];
    pairs[k] = std::move(pairs.back());
    pairs.pop_back();
    ++st.pairs_reduced;

    Polynomial<F> s =
        pair.j == kInput ? inputs[pair.i] : s_polynomial(store[pair.i].poly, store[pair.j].poly);
    unsigned sugar = pair.sugar;
    detail::DivisorIndex<F> index;
    // Elements dropped from `basis` by the criteria still reduce; they are
    // usually the short ones.
    for (const auto& e : store) index.add(&e.poly);
    Polynomial<F> h = detail::remainder(s, index, false, [&](std::size_t idx, const Monomial& m) {
      sugar = std::max(sugar, store[idx].sugar + m.degree());
      check_clock();
    }, false);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    h = h.monic();
    unit = h.is_constant();
    store.push_back({std::move(h), sugar});
    update(store.size() - 1);
  }

  if (unit) return GroebnerBasis<F>(ring, {Polynomial<F>::constant(ring, ring->field().one())});
  std::vector<Polynomial<F>> polys;
  for (std::size_t g : basis) polys.push_back(store[g].poly);
  return GroebnerBasis<F>(ring, detail::reduce_basis(std::move(polys)));
}

template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& generators, const GroebnerOptions& options = {},
                            GroebnerStats* stats = nullptr) {
  for (const auto& g : generators) {
    if (g.ring()) return buchberger(g.ring(), generators, options, stats);
  }
  throw InvalidInput("cannot infer the ring of an empty generator list");
}

/// Post-hoc Buchberger criterion: every S-polynomial of the list reduces to
/// zero against the list.
template <class F>
bool is_groebner_basis(const std::vector<Polynomial<F>>& polys) {
  detail::DivisorIndex<F> index;
  for (const auto& p : polys) {
    if (p.is_zero()) return false;
    index.add(&p);
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      const auto r = detail::remainder(s_polynomial(polys[i], polys[j]), index, true, detail::kNoStep, false);
      if (!r.is_zero()) return false;
    }
  }
  return true;
}

/// Reducedness: monic, and no term of any element divisible by the leading
/// monomial of another.
template <class F>
bool is_reduced_basis(const std::vector<Polynomial<F>>& polys) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero() || !(polys[i].leading_coefficient() == polys[i].ring()->field().one())) return false;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : polys[i].terms()) {
        if (polys[j].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

}  // namespace orthochart

#endif  // ORTHOCHART_GROEBNER_HPP_
