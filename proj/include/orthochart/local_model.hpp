#ifndef ORTHOCHART_LOCAL_MODEL_HPP_
#define ORTHOCHART_LOCAL_MODEL_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orthochart/chart.hpp"
#include "orthochart/errors.hpp"
#include "orthochart/ideal.hpp"
#include "orthochart/poly_matrix.hpp"
#include "orthochart/polynomial.hpp"

namespace orthochart {

enum class FiberKind { special, generic, arithmetic };

template <class F>
struct Component {
  std::string label;
  Ideal<F> ideal;
  // Variable whose pure powers must not lead any basis element.
  std::string regular_variable;
};

template <class F>
struct ComponentFamily {
  std::vector<Component<F>> components;
};

/// Drops duplicates (up to a scalar) and zeros, keeping first occurrences.
template <class F>
std::vector<Polynomial<F>> dedup_generators(const std::vector<Polynomial<F>>& gens) {
  std::vector<Polynomial<F>> out, seen;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto m = g.monic();
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
    seen.push_back(m);
    out.push_back(g);
  }
  return out;
}

/// Every ideal attached to one chart, over the coefficient field F.
template <class F>
class LocalModel {
 public:
  using Poly = Polynomial<F>;
  using Matrix = PolyMatrix<F>;

  LocalModel(ChartPresentation chart, F field = F())
      : chart_(std::move(chart)), reduced_ring_(make_ring(field, VariableTable(chart_.reduced_variables()))) {
    auto special = chart_.reduced_variables();
    special.pop_back();
    special_ring_ = make_ring(field, VariableTable(special));
    if (chart_.full_variables().size() <= kMaxVariables) {
      full_ring_ = make_ring(field, VariableTable(chart_.full_variables()));
    }
  }

  const ChartPresentation& chart() const { return chart_; }
  const F& field() const { return reduced_ring_->field(); }

  bool has_full_ring() const { return full_ring_ != nullptr; }
  // x[1][1] > ... > x[d][d] > pi, grlex.
  const RingPtr<F>& full_ring() const {
    if (!full_ring_) {
      throw InvalidChart("the full chart ring of " + chart_.id() + " needs " +
                         std::to_string(chart_.full_variables().size()) + " variables, more than supported");
    }
    return full_ring_;
  }
  // x[t][s] (t in Z, s in Zc) > pi, grlex.
  const RingPtr<F>& reduced_ring() const { return reduced_ring_; }
  // Reduced variables without pi.
  const RingPtr<F>& special_ring() const { return special_ring_; }
  // Full variables with the non-reduced ones as an eliminated block.
  RingPtr<F> elimination_ring() const {
    return make_ring(field(), VariableTable(chart_.elimination_variables()),
                     MonomialOrder::block(chart_.eliminated_count()));
  }

  Poly pi() const { return Poly::variable(full_ring(), "pi"); }

  Matrix X() const {
    const int d = chart_.d();
    Matrix m(d, d);
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) m(i - 1, j - 1) = Poly::variable(full_ring(), ChartPresentation::x(i, j));
    }
    return m;
  }

  // Submatrix of X on the given 1-based rows and columns.
  Matrix block(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < cols.size(); ++b) {
        m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
            Poly::variable(full_ring(), ChartPresentation::x(rows[a], cols[b]));
      }
    }
    return m;
  }

  Matrix A() const { return block(chart_.Z(), chart_.Z()); }
  Matrix B1() const { return block(chart_.Z(), chart_.left_columns()); }
  Matrix B2() const { return block(chart_.Z(), chart_.right_columns()); }
  Matrix Q() const {
    if (chart_.same_parity()) throw NotApplicable("the Q column exists only for opposite parity");
    return block(chart_.Z(), {chart_.middle_column()});
  }
  // G1 restricted to Z (the antidiagonal J_l, or its EO variant).
  Matrix J_Z() const { return gram_block(chart_.gram().G1, chart_.Z(), chart_.Z()); }
  // G0 pairing the right columns with the left ones (J_{n-r}).
  Matrix J_w() const { return gram_block(chart_.gram().G0, chart_.right_columns(), chart_.left_columns()); }

  Matrix G0() const { return lift(chart_.gram().G0, full_ring()); }
  Matrix G1() const { return lift(chart_.gram().G1, full_ring()); }

  // X^t G1 X + 2(G0 X + pi G1 X)
  Matrix isotropy_relation() const {
    const Matrix x = X(), g0 = G0(), g1 = G1();
    const Matrix g1x = product(g1, x);
    const Poly two = Poly::constant(full_ring(), 2);
    return product(x.transpose(), g1x) + scaled(product(g0, x) + scaled(g1x, pi()), two);
  }
  // X^t G0 X - 2 pi (G0 X + pi G1 X)
  Matrix dual_relation() const {
    const Matrix x = X(), g0 = G0(), g1 = G1();
    const Poly two_pi = pi() * Poly::constant(full_ring(), 2);
    return product(x.transpose(), product(g0, x)) - scaled(product(g0, x) + scaled(product(g1, x), pi()), two_pi);
  }
  // B2 J B1^t - A J, or for opposite parity 2 B2 J B1^t + Q Q^t - 2 A J.
  Matrix block_relation() const {
    const Matrix theta = product(product(B2(), J_w()), B1().transpose());
    const Matrix aj = product(A(), J_Z());
    if (chart_.same_parity()) return theta - aj;
    const Poly two = Poly::constant(full_ring(), 2);
    const Matrix q = Q();
    return scaled(theta, two) + product(q, q.transpose()) - scaled(aj, two);
  }
  Matrix antisymmetry_relation() const {
    const Matrix a = A(), j = J_Z();
    return product(a, j) - product(j, a.transpose());
  }
  Poly trace_X() const { return trace(X()); }
  Poly trace_A_relation() const { return trace(A()) + pi() * Poly::constant(full_ring(), 2); }

  std::vector<Poly> naive_generators() const {
    const Matrix x = X();
    std::vector<Poly> gens = entries(product(x, x));
    append(gens, entries(dual_relation()));
    append(gens, minors2(x));
    append(gens, entries(isotropy_relation()));
    return dedup_generators(gens);
  }

  std::vector<Poly> additional_generators() const {
    std::vector<Poly> gens{trace_X(), trace_A_relation()};
    append(gens, entries(antisymmetry_relation()));
    append(gens, entries(block_relation()));
    return dedup_generators(gens);
  }

  Ideal<F> naive_ideal() const { return Ideal<F>(full_ring(), naive_generators()); }
  Ideal<F> additional_ideal() const { return Ideal<F>(full_ring(), additional_generators()); }
  Ideal<F> full_ideal() const {
    auto gens = naive_generators();
    append(gens, additional_generators());
    return Ideal<F>(full_ring(), dedup_generators(gens));
  }

  std::vector<Poly> intermediate_generators() const {
    if (!chart_.same_parity()) throw NotApplicable("the intermediate ideal is defined for same parity only");
    std::vector<Poly> gens = minors2(X());
    gens.push_back(trace_X());
    gens.push_back(trace_A_relation());
    append(gens, entries(block_relation()));
    append(gens, entries(isotropy_relation()));
    return dedup_generators(gens);
  }
  Ideal<F> intermediate_ideal() const { return Ideal<F>(full_ring(), intermediate_generators()); }

  // ---- reduced ring -------------------------------------------------------

  Poly reduced_var(int t, int s) const { return Poly::variable(reduced_ring_, ChartPresentation::x(t, s)); }

  /// The matrix (B1 | Q | B2) = X[Z, Zc] in the reduced ring.
  Matrix reduced_B() const {
    Matrix m(static_cast<Eigen::Index>(chart_.Z().size()), static_cast<Eigen::Index>(chart_.Zc().size()));
    for (std::size_t a = 0; a < chart_.Z().size(); ++a) {
      for (std::size_t b = 0; b < chart_.Zc().size(); ++b) {
        m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = reduced_var(chart_.Z()[a], chart_.Zc()[b]);
      }
    }
    return m;
  }

  std::vector<Poly> reduced_minors() const { return minors2(reduced_B()); }

  /// The trace quadric without pi: 1/4 sum G1_ij G0_st x_is x_jt over
  /// i, j in Z and s, t in Zc, written modulo the minors so that every
  /// product x_is x_jt with i < j has s <= t.
  Poly trace_quadric() const {
    const auto& G0 = chart_.gram().G0;
    const auto& G1 = chart_.gram().G1;
    std::vector<Term<F>> terms;
    const auto quarter = field().from_rational(Rational(1, 4));
    const auto& vars = reduced_ring_->variables();
    for (int i : chart_.Z()) {
      for (int j : chart_.Z()) {
        if (G1(i - 1, j - 1) == 0) continue;
        for (int s : chart_.Zc()) {
          for (int t : chart_.Zc()) {
            if (G0(s - 1, t - 1) == 0) continue;
            int ri = i, rj = j, cs = s, ct = t;
            if (ri > rj) {
              std::swap(ri, rj);
              std::swap(cs, ct);
            }
            if (ri < rj && cs > ct) std::swap(cs, ct);
            const auto m = Monomial::variable(*vars.index_of(ChartPresentation::x(ri, cs))) *
                           Monomial::variable(*vars.index_of(ChartPresentation::x(rj, ct)));
            terms.push_back({m, quarter * field().from_integer(G1(i - 1, j - 1) * G0(s - 1, t - 1))});
          }
        }
      }
    }
    return Poly::from_terms(reduced_ring_, std::move(terms));
  }

  Poly reduced_trace_generator() const { return trace_quadric() + Poly::variable(reduced_ring_, "pi"); }

  std::vector<Poly> reduced_generators() const {
    auto gens = reduced_minors();
    gens.push_back(reduced_trace_generator());
    return gens;
  }
  Ideal<F> reduced_ideal() const { return Ideal<F>(reduced_ring_, reduced_generators()); }

  /// The map phi from the full ring to the reduced ring, by variable name.
  std::map<std::string, Poly> substitution_map() const {
    const int d = chart_.d();
    std::map<std::string, Poly> phi;
    phi["pi"] = Poly::variable(reduced_ring_, "pi");
    for (int t : chart_.Z()) {
      for (int s : chart_.Zc()) phi[ChartPresentation::x(t, s)] = reduced_var(t, s);
    }
    // A = (B2 J B1^t + 1/2 Q Q^t) J_Z.
    const auto& G0 = chart_.gram().G0;
    const auto& G1 = chart_.gram().G1;
    const auto half = field().from_rational(Rational(1, 2));
    for (int a : chart_.Z()) {
      for (int b : chart_.Z()) {
        Poly value(reduced_ring_);
        for (int c : chart_.Z()) {
          if (G1(c - 1, b - 1) == 0) continue;
          Poly theta(reduced_ring_);
          for (int p : chart_.right_columns()) {
            for (int q : chart_.left_columns()) {
              if (G0(p - 1, q - 1) != 0) theta += reduced_var(a, p) * reduced_var(c, q);
            }
          }
          if (!chart_.same_parity()) {
            const int m = chart_.middle_column();
            theta += (reduced_var(a, m) * reduced_var(c, m)).scaled(half);
          }
          value += theta;
        }
        phi[ChartPresentation::x(a, b)] = value;
      }
    }
    // Rows k in Zc: x_kj = -1/2 sum_{a,b in Z} G1_ab x_{a, sigma0(k)} phi(x_bj).
    for (int k : chart_.Zc()) {
      const int sk = chart_.sigma0(k);
      for (int j = 1; j <= d; ++j) {
        Poly value(reduced_ring_);
        for (int a : chart_.Z()) {
          for (int b : chart_.Z()) {
            if (G1(a - 1, b - 1) == 0) continue;
            value += reduced_var(a, sk) * phi.at(ChartPresentation::x(b, j));
          }
        }
        phi[ChartPresentation::x(k, j)] = value.scaled(-half);
      }
    }
    return phi;
  }

  Poly apply_phi(const Poly& f, const std::map<std::string, Poly>& phi) const {
    return substitute(change_ring(f, full_ring()), phi, reduced_ring_);
  }

  /// x_{k,j} + 1/2 sum G1_ab x_{a,sigma0 k} x_{b,j} for k in Zc, with the A
  /// block left unsubstituted.
  std::vector<Poly> row_elimination_generators() const {
    const auto& G1 = chart_.gram().G1;
    const auto half = field().from_rational(Rational(1, 2));
    std::vector<Poly> gens;
    for (int k : chart_.Zc()) {
      const int sk = chart_.sigma0(k);
      for (int j = 1; j <= chart_.d(); ++j) {
        Poly g = Poly::variable(full_ring(), ChartPresentation::x(k, j));
        for (int a : chart_.Z()) {
          for (int b : chart_.Z()) {
            if (G1(a - 1, b - 1) == 0) continue;
            g += (Poly::variable(full_ring(), ChartPresentation::x(a, sk)) *
                  Poly::variable(full_ring(), ChartPresentation::x(b, j)))
                     .scaled(half);
          }
        }
        gens.push_back(g);
      }
    }
    return gens;
  }

  // ---- fibers and components ---------------------------------------------

  /// pi -> 0 (special) or pi -> c (generic); the result drops pi.
  Ideal<F> specialize_fiber(const Ideal<F>& I, FiberKind kind, const typename F::Element& c) const {
    if (kind == FiberKind::arithmetic) return I;
    if (kind == FiberKind::generic && F::is_zero(c)) throw InvalidUnit();
    std::vector<std::string> kept;
    for (const auto& name : I.ring()->variables().names()) {
      if (name != "pi") kept.push_back(name);
    }
    const RingPtr<F> target = make_ring(field(), VariableTable(kept), I.ring()->order().kind ==
                                                                             MonomialOrder::Kind::block
                                                                         ? MonomialOrder::grlex()
                                                                         : I.ring()->order());
    const Poly value = kind == FiberKind::special ? Poly(target) : Poly::constant(target, c);
    std::vector<Poly> gens;
    for (const auto& g : I.generators()) gens.push_back(substitute(g, {{"pi", value}}, target));
    return Ideal<F>(target, gens);
  }
  Ideal<F> specialize_fiber(const Ideal<F>& I, FiberKind kind) const {
    return specialize_fiber(I, kind, field().one());
  }

  Ideal<F> special_fiber_ideal() const { return specialize_fiber(reduced_ideal(), FiberKind::special); }

  ComponentFamily<F> components() const {
    const auto& Z = chart_.Z();
    const auto& Zc = chart_.Zc();
    const auto sv = [&](int t, int s) { return Poly::variable(special_ring_, ChartPresentation::x(t, s)); };
    const auto half = field().from_rational(Rational(1, 2));
    std::vector<Poly> minors;
    for (const auto& m : reduced_minors()) minors.push_back(change_ring(m, special_ring_));

    // sum over sigma1-orbits {a, sigma1 a} of x_{sigma1 a, t} x_{a, s}
    const auto rowform = [&](int t, int s) {
      Poly f(special_ring_);
      for (int a : Z) {
        const int b = chart_.sigma1(a);
        if (a < b) f += sv(b, t) * sv(a, s);
        if (a == b) f += (sv(a, t) * sv(a, s)).scaled(half);
      }
      return f;
    };
    const auto colform = [&](int i, int j) {
      Poly f(special_ring_);
      for (int b : Zc) {
        const int c = chart_.sigma0(b);
        if (b < c) f += sv(i, b) * sv(j, c);
        if (b == c) f += (sv(i, b) * sv(j, b)).scaled(half);
      }
      return f;
    };
    const auto with_minors = [&](std::vector<Poly> gens) {
      append(gens, minors);
      return Ideal<F>(special_ring_, dedup_generators(gens));
    };
    std::vector<Poly> rows, cols;
    for (int t : Zc) {
      for (int s : Zc) rows.push_back(rowform(t, s));
    }
    for (int i : Z) {
      for (int j : Z) cols.push_back(colform(i, j));
    }

    ComponentFamily<F> fam;
    const std::string first = ChartPresentation::x(Z.front(), Zc.front());
    if (Z.size() == 2) {
      std::vector<Poly> row1, row2;
      for (int s : Zc) {
        row1.push_back(sv(Z[0], s));
        row2.push_back(sv(Z[1], s));
      }
      fam.components.push_back({"I1", Ideal<F>(special_ring_, row1), ChartPresentation::x(Z[1], Zc.front())});
      fam.components.push_back({"I2", Ideal<F>(special_ring_, row2), first});
      fam.components.push_back({"I3", with_minors(cols), ChartPresentation::x(Z[1], Zc.front())});
    } else if (Zc.size() == 2) {
      std::vector<Poly> col1, col2;
      for (int t : Z) {
        col1.push_back(sv(t, Zc[0]));
        col2.push_back(sv(t, Zc[1]));
      }
      fam.components.push_back({"I1", Ideal<F>(special_ring_, col1), ChartPresentation::x(Z.front(), Zc[1])});
      fam.components.push_back({"I2", Ideal<F>(special_ring_, col2), first});
      fam.components.push_back({"I3", with_minors(rows), first});
    } else {
      fam.components.push_back({"I1", with_minors(rows), first});
      fam.components.push_back({"I2", with_minors(cols), first});
    }
    return fam;
  }

 private:
  static void append(std::vector<Poly>& out, const std::vector<Poly>& more) {
    out.insert(out.end(), more.begin(), more.end());
  }

  Matrix gram_block(const Eigen::MatrixXi& g, const std::vector<int>& rows, const std::vector<int>& cols) const {
    Eigen::MatrixXi m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < cols.size(); ++b) {
        m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = g(rows[a] - 1, cols[b] - 1);
      }
    }
    return lift(m, full_ring());
  }

  ChartPresentation chart_;
  RingPtr<F> full_ring_;
  RingPtr<F> reduced_ring_;
  RingPtr<F> special_ring_;
};

}  // namespace orthochart

#endif  // ORTHOCHART_LOCAL_MODEL_HPP_
