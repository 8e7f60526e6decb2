#ifndef ORTHOCHART_VERIFIER_HPP_
#define ORTHOCHART_VERIFIER_HPP_

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orthochart/chart.hpp"
#include "orthochart/errors.hpp"
#include "orthochart/ideal.hpp"
#include "orthochart/local_model.hpp"

namespace orthochart {

enum class Status { pass, fail, timeout, not_applicable };

std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::fail;
  nlohmann::json witness = nlohmann::json::object();
  double millis = 0.0;
};

struct ChartReport {
  int d = 0;
  int l = 0;
  std::string parity;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct EngineInfo {
  std::uint32_t modulus = 0;  // 0 = rationals
  std::string order = "grlex";
  long long time_limit_ms = 0;
  std::size_t max_pairs = 0;
};

struct SuiteReport {
  EngineInfo engine;
  std::vector<ChartReport> charts;

  bool empty() const;
  bool passed() const;  // false for an empty report
  bool any_timeout() const;
};

/// Deliberate damage to the input ideals, used to show that each check can
/// fail.
enum class Mutation {
  none,
  drop_minors,           // I': no 2x2 minors of X
  drop_trace_A,          // I', I^add: no Tr(A) + 2 pi
  drop_block_relation,   // I': no B2 J B1^t - A J
  drop_isotropy,         // I': no X^t G1 X + 2(G0 + pi G1) X
  drop_cross_minors,     // (∧²X) keeps only minors inside one column block
  drop_row_elimination,  // no x_kj + 1/2 sum ... generators
  drop_B_minors,         // no minors of (B1|B2)
  drop_trace_generator,  // I'': minors only
  pi_times_trace,        // I'': pi * (trace generator) instead of it
  drop_component,        // last special-fiber component removed
  perturb_phi,           // phi(x_11) shifted by pi
};

std::string to_string(Mutation m);
Mutation parse_mutation(const std::string& name);

const std::vector<std::string>& lemma_names();
/// Every check name accepted by verify_check, sorted.
const std::vector<std::string>& check_names();

struct VerifierOptions {
  GroebnerOptions groebner;
  // Checks that need the full d x d chart ring run only for d up to this.
  int full_x_max_d = 6;
  // Charts on which to re-run every check over the rationals.
  std::vector<std::pair<int, int>> cross_check_charts;
  unsigned threads = 1;
};

namespace detail {

template <class F>
nlohmann::json polys_json(const std::vector<Polynomial<F>>& ps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

template <class F>
std::vector<Polynomial<F>> concat(std::vector<Polynomial<F>> a, const std::vector<Polynomial<F>>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <class F>
std::vector<Polynomial<F>> rows_of(const PolyMatrix<F>& m, const std::vector<int>& rows) {
  std::vector<Polynomial<F>> out;
  for (int i : rows) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i - 1, j));
  }
  return out;
}

// Membership of every target; returns the first failure as a witness.
template <class F>
CheckResult membership_check(const std::string& name, const std::vector<Polynomial<F>>& targets,
                             const Ideal<F>& ideal, const RingPtr<F>& ring, const GroebnerOptions& options) {
  CheckResult res{name, Status::pass, nlohmann::json::object(), 0.0};
  const Ideal<F> J = ideal.in_ring(ring);
  const auto& gb = J.groebner(options);
  res.witness["targets"] = targets.size();
  res.witness["ideal_generators"] = J.generators().size();
  for (const auto& t : targets) {
    const auto nf = gb.normal_form(change_ring(t, ring));
    if (!nf.is_zero()) {
      res.status = Status::fail;
      res.witness["target"] = to_string(t);
      res.witness["normal_form"] = to_string(nf);
      return res;
    }
  }
  return res;
}

template <class Fn>
CheckResult timed(const std::string& name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult res;
  try {
    res = fn();
  } catch (const Timeout& e) {
    res = {name, Status::timeout, {{"budget", e.what()}}, 0.0};
  } catch (const NotApplicable& e) {
    res = {name, Status::not_applicable, {{"reason", e.what()}}, 0.0};
  }
  res.name = name;
  res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace detail

template <class F>
class Verifier {
 public:
  using Poly = Polynomial<F>;

  Verifier(const ChartPresentation& chart, F field, VerifierOptions options = {})
      : model_(chart, std::move(field)), options_(std::move(options)) {}

  const LocalModel<F>& model() const { return model_; }

  CheckResult verify_lemma(const std::string& name, Mutation mutation = Mutation::none) const {
    return detail::timed(name, [&] { return lemma(name, mutation); });
  }

  CheckResult verify_reduction(Mutation mutation = Mutation::none) const {
    return detail::timed("reduction", [&] { return reduction(mutation); });
  }

  CheckResult verify_dimensions(Mutation mutation = Mutation::none) const {
    return detail::timed("dimensions", [&] {
      const Ideal<F> R = reduced(mutation);
      const unsigned expected = static_cast<unsigned>(model_.chart().d() - 2);
      const Ideal<F> special = model_.specialize_fiber(R, FiberKind::special);
      const Ideal<F> generic = model_.specialize_fiber(R, FiberKind::generic);
      const unsigned ds = dimension_or_empty(special);
      const unsigned dg = dimension_or_empty(generic);
      CheckResult res{"dimensions", ds == expected && dg == expected ? Status::pass : Status::fail, {}, 0.0};
      res.witness = {{"special", ds}, {"generic", dg}, {"expected", expected}};
      return res;
    });
  }

  CheckResult verify_flatness(Mutation mutation = Mutation::none) const {
    return detail::timed("flatness", [&] {
      const Ideal<F> R = reduced(mutation);
      const Poly pi = Poly::variable(R.ring(), "pi");
      const Ideal<F> Q = ideal_quotient(R, pi, options_.groebner);
      const auto eq = ideals_equal(Q, R, options_.groebner);
      CheckResult res{"flatness", eq.equal ? Status::pass : Status::fail, {}, 0.0};
      res.witness["criterion"] = "(I'' : pi) == I''";
      if (!eq.equal && eq.witness) res.witness["zero_divisor_witness"] = to_string(*eq.witness);
      return res;
    });
  }

  CheckResult verify_special_fiber(Mutation mutation = Mutation::none) const {
    return detail::timed("special-fiber", [&] { return special_fiber(mutation); });
  }

  CheckResult verify_check(const std::string& name, Mutation mutation = Mutation::none) const {
    if (name == "reduction") return verify_reduction(mutation);
    if (name == "dimensions") return verify_dimensions(mutation);
    if (name == "flatness") return verify_flatness(mutation);
    if (name == "special-fiber") return verify_special_fiber(mutation);
    const auto& lemmas = lemma_names();
    if (std::find(lemmas.begin(), lemmas.end(), name) != lemmas.end()) return verify_lemma(name, mutation);
    throw InvalidInput("unknown check '" + name + "'");
  }

  ChartReport run_all() const {
    ChartReport report{model_.chart().d(), model_.chart().l(), to_string(model_.chart().parity()), {}};
    for (const auto& name : check_names()) report.checks.push_back(verify_check(name));
    return report;
  }

 private:
  void require_full_x() const {
    const int d = model_.chart().d();
    if (d > options_.full_x_max_d || !model_.has_full_ring()) {
      throw NotApplicable("full chart ring checks are limited to d <= " + std::to_string(options_.full_x_max_d) +
                          ", chart has d = " + std::to_string(d));
    }
  }

  unsigned dimension_or_empty(const Ideal<F>& I) const {
    const auto& gb = I.groebner(options_.groebner);
    return gb.is_unit() ? 0U : krull_dimension(gb);
  }

  Ideal<F> reduced(Mutation mutation) const {
    auto gens = model_.reduced_minors();
    const Poly trace = model_.reduced_trace_generator();
    if (mutation == Mutation::pi_times_trace) {
      gens.push_back(trace * Poly::variable(model_.reduced_ring(), "pi"));
    } else if (mutation != Mutation::drop_trace_generator) {
      gens.push_back(trace);
    }
    return Ideal<F>(model_.reduced_ring(), gens);
  }

  // I' with optional families removed.
  Ideal<F> intermediate(Mutation mutation, bool with_trace_X = true) const {
    using detail::concat;
    std::vector<Poly> gens;
    if (mutation != Mutation::drop_minors) gens = concat(gens, minors2(model_.X()));
    if (with_trace_X) gens.push_back(model_.trace_X());
    if (mutation != Mutation::drop_trace_A) gens.push_back(model_.trace_A_relation());
    if (mutation != Mutation::drop_block_relation) gens = concat(gens, entries(model_.block_relation()));
    if (mutation != Mutation::drop_isotropy) gens = concat(gens, entries(model_.isotropy_relation()));
    return Ideal<F>(model_.full_ring(), dedup_generators(gens));
  }

  std::vector<Poly> X_minors(Mutation mutation) const {
    if (mutation != Mutation::drop_cross_minors) return minors2(model_.X());
    // Only minors whose two columns lie in the same block (left, Z, right).
    const auto& c = model_.chart();
    const auto block_of = [&](int j) {
      if (j <= static_cast<int>(c.left_columns().size())) return 0;
      if (j >= c.right_columns().front()) return 2;
      return 1;
    };
    const auto X = model_.X();
    std::vector<Poly> out;
    for (int i1 = 1; i1 <= c.d(); ++i1) {
      for (int i2 = i1 + 1; i2 <= c.d(); ++i2) {
        for (int j1 = 1; j1 <= c.d(); ++j1) {
          for (int j2 = j1 + 1; j2 <= c.d(); ++j2) {
            if (block_of(j1) != block_of(j2)) continue;
            out.push_back(X(i1 - 1, j1 - 1) * X(i2 - 1, j2 - 1) - X(i1 - 1, j2 - 1) * X(i2 - 1, j1 - 1));
          }
        }
      }
    }
    return out;
  }

  CheckResult lemma(const std::string& name, Mutation mutation) const {
    if (!model_.chart().same_parity()) throw NotApplicable("the lemma chain is stated for same parity charts");
    require_full_x();
    using detail::concat;
    const auto& M = model_;
    const RingPtr<F> ring = M.elimination_ring();
    const auto& opt = options_.groebner;
    if (name == "X2-in-Iprime") {
      const auto X = M.X();
      return detail::membership_check(name, entries(product(X, X)), intermediate(mutation), ring, opt);
    }
    if (name == "antisym") {
      return detail::membership_check(name, entries(M.antisymmetry_relation()), intermediate(mutation), ring, opt);
    }
    if (name == "S0-relation") {
      return detail::membership_check(name, entries(M.dual_relation()), intermediate(mutation), ring, opt);
    }
    if (name == "trace-in-ideal") {
      return detail::membership_check(name, {M.trace_X()}, intermediate(mutation, false), ring, opt);
    }
    if (name == "B1JB2-symmetric") {
      const auto& c = M.chart();
      const auto theta = product(product(M.B1(), model_gram(c.left_columns(), c.right_columns())),
                                 M.B2().transpose());
      std::vector<Poly> targets;
      for (Eigen::Index i = 0; i < theta.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < theta.cols(); ++j) targets.push_back(theta(i, j) - theta(j, i));
      }
      return detail::membership_check(name, targets, Ideal<F>(M.full_ring(), X_minors(mutation)), ring, opt);
    }
    // The remaining two lemmas work modulo the row-elimination relations.
    std::vector<Poly> base;
    if (mutation != Mutation::drop_row_elimination) base = M.row_elimination_generators();
    if (mutation != Mutation::drop_trace_A) base.push_back(M.trace_A_relation());
    if (mutation != Mutation::drop_block_relation) base = concat(base, entries(M.block_relation()));
    if (name == "A-relations") {
      if (mutation != Mutation::drop_minors) base = concat(base, X_minors(mutation));
      const auto targets = detail::rows_of(M.isotropy_relation(), M.chart().Z());
      return detail::membership_check(name, targets, Ideal<F>(M.full_ring(), base), ring, opt);
    }
    if (name == "minors-reduce") {
      if (mutation != Mutation::drop_B_minors) {
        std::vector<Poly> bm;
        for (const auto& m : M.reduced_minors()) bm.push_back(change_ring(m, M.full_ring()));
        base = concat(base, bm);
      }
      return detail::membership_check(name, minors2(M.X()), Ideal<F>(M.full_ring(), base), ring, opt);
    }
    throw InvalidInput("unknown lemma '" + name + "'");
  }

  PolyMatrix<F> model_gram(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Eigen::MatrixXi m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < cols.size(); ++b) {
        m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
            model_.chart().gram().G0(rows[a] - 1, cols[b] - 1);
      }
    }
    return lift(m, model_.full_ring());
  }

  CheckResult reduction(Mutation mutation) const {
    require_full_x();
    const auto& M = model_;
    const auto& opt = options_.groebner;
    const RingPtr<F> ring = M.elimination_ring();
    CheckResult res{"reduction", Status::pass, nlohmann::json::object(), 0.0};
    std::vector<Poly> full_gens = M.naive_generators();
    for (const auto& g : M.additional_generators()) {
      if (mutation == Mutation::drop_trace_A && g == M.trace_A_relation()) continue;
      full_gens.push_back(g);
    }
    const Ideal<F> I = Ideal<F>(M.full_ring(), dedup_generators(full_gens)).in_ring(ring);
    const auto& gbI = I.groebner(opt);
    auto fail = [&](const std::string& part, nlohmann::json detail) {
      res.status = Status::fail;
      res.witness["failed_part"] = part;
      res.witness["detail"] = std::move(detail);
      return res;
    };

    // (a) I == I'
    if (M.chart().same_parity()) {
      const auto eq = ideals_equal(I, M.intermediate_ideal().in_ring(ring), opt);
      if (!eq.equal) {
        return fail("a", {{"witness", to_string(*eq.witness)}, {"side", eq.witness_side == "left" ? "I" : "I'"}});
      }
      res.witness["a"] = "I == I'";
    } else {
      res.witness["a"] = "not applicable (opposite parity)";
    }

    auto phi = M.substitution_map();
    if (mutation == Mutation::perturb_phi) {
      auto& img = phi.at(ChartPresentation::x(1, 1));
      img += Poly::variable(M.reduced_ring(), "pi");
    }
    const Ideal<F> R = M.reduced_ideal();
    const auto& gbR = R.groebner(opt);

    // (b) phi(g) in I'' for every generator g of I
    for (const auto& g : I.generators()) {
      const Poly image = M.apply_phi(g, phi);
      const Poly nf = gbR.normal_form(image);
      if (!nf.is_zero()) {
        return fail("b", {{"generator", to_string(g)}, {"image", to_string(image)}, {"normal_form", to_string(nf)}});
      }
    }
    res.witness["b"] = I.generators().size();
    // (c) I'' ⊆ I
    for (const auto& g : R.generators()) {
      if (!gbI.contains(change_ring(g, ring))) return fail("c", {{"generator", to_string(g)}});
    }
    res.witness["c"] = R.generators().size();
    // (d) x_v - phi(x_v) in I
    for (const auto& [name, image] : phi) {
      const Poly diff = Poly::variable(ring, name) - change_ring(image, ring);
      const Poly nf = gbI.normal_form(diff);
      if (!nf.is_zero()) return fail("d", {{"variable", name}, {"image", to_string(image)}});
    }
    res.witness["d"] = phi.size();
    return res;
  }

  CheckResult special_fiber(Mutation mutation) const {
    const auto& M = model_;
    const auto& opt = options_.groebner;
    CheckResult res{"special-fiber", Status::pass, nlohmann::json::object(), 0.0};
    res.witness["note"] = "component primality is not verified; only the leading-term criterion is checked";
    const Ideal<F> Is = M.specialize_fiber(reduced(mutation), FiberKind::special);
    auto family = M.components();
    if (mutation == Mutation::drop_component) family.components.pop_back();
    const auto& comps = family.components;
    const int expected = M.chart().expected_components();
    res.witness["components"] = comps.size();
    res.witness["expected_components"] = expected;
    const auto fail = [&](const std::string& what) {
      res.status = Status::fail;
      res.witness["failed"].push_back(what);
    };
    if (static_cast<int>(comps.size()) != expected) fail("component count");
    if (comps.empty()) {
      fail("no components");
      return res;
    }

    Ideal<F> cap = comps.front().ideal;
    for (std::size_t k = 1; k < comps.size(); ++k) cap = intersect(cap, comps[k].ideal, opt);
    const auto eq = ideals_equal(Is, cap, opt);
    res.witness["reduced_decomposition"] = eq.equal;
    if (!eq.equal) {
      fail("I_s == intersection");
      res.witness["decomposition_witness"] = {{"polynomial", to_string(*eq.witness)},
                                              {"side", eq.witness_side == "left" ? "I_s" : "intersection"}};
    }

    const unsigned dim = static_cast<unsigned>(M.chart().d() - 2);
    for (const auto& c : comps) {
      const auto& gb = c.ideal.groebner(opt);
      const unsigned dc = gb.is_unit() ? 0U : krull_dimension(gb);
      res.witness["dimensions"][c.label] = dc;
      if (dc != dim) fail("dimension of " + c.label);
      const bool contains_Is = std::all_of(Is.generators().begin(), Is.generators().end(),
                                           [&](const Poly& g) { return gb.contains(g); });
      if (!contains_Is) fail(c.label + " does not contain I_s");
      const bool ppf = pure_power_free(gb, c.regular_variable);
      res.witness["pure_power_free"][c.label] = {{"variable", c.regular_variable}, {"holds", ppf}};
      if (!ppf) fail("pure power of " + c.regular_variable + " in LT(" + c.label + ")");
    }
    bool incomparable = true;
    for (const auto& a : comps) {
      for (const auto& b : comps) {
        if (&a == &b) continue;
        const auto& gb = b.ideal.groebner(opt);
        const bool contained = std::all_of(a.ideal.generators().begin(), a.ideal.generators().end(),
                                           [&](const Poly& g) { return gb.contains(g); });
        if (contained) {
          incomparable = false;
          fail(a.label + " ⊆ " + b.label);
        }
      }
    }
    res.witness["incomparable"] = incomparable;
    return res;
  }

  LocalModel<F> model_;
  VerifierOptions options_;
};

/// Runs every check on each chart over GF(modulus) (modulus 0: rationals),
/// plus a rational re-run on the cross-check charts.
SuiteReport run_suite(const std::vector<std::pair<int, int>>& charts, std::uint32_t modulus,
                      const VerifierOptions& options = {});

/// A single named check on a single chart, wrapped as a one-chart report.
SuiteReport run_check(int d, int l, const std::string& check, std::uint32_t modulus,
                      const VerifierOptions& options = {}, Mutation mutation = Mutation::none);

}  // namespace orthochart

#endif  // ORTHOCHART_VERIFIER_HPP_
