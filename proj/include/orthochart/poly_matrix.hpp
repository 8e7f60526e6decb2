#ifndef ORTHOCHART_POLY_MATRIX_HPP_
#define ORTHOCHART_POLY_MATRIX_HPP_

#include <Eigen/Core>

#include <vector>

#include "orthochart/polynomial.hpp"

namespace Eigen {

template <class F>
struct NumTraits<orthochart::Polynomial<F>> : GenericNumTraits<orthochart::Polynomial<F>> {
  using Real = orthochart::Polynomial<F>;
  using NonInteger = orthochart::Polynomial<F>;
  using Literal = orthochart::Polynomial<F>;
  using Nested = orthochart::Polynomial<F>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
};

}  // namespace Eigen

namespace orthochart {

template <class F>
using PolyMatrix = Eigen::Matrix<Polynomial<F>, Eigen::Dynamic, Eigen::Dynamic>;

// Eigen's own product kernels want Scalar(0); these helpers stay on the
// polynomial operators and accept any block or transpose expression.

template <class DA, class DB>
auto product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using P = typename DA::Scalar;
  Eigen::Matrix<P, Eigen::Dynamic, Eigen::Dynamic> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      std::vector<typename P::TermType> acc;
      P sum;
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        const P term = a(i, k) * b(k, j);
        acc.insert(acc.end(), term.terms().begin(), term.terms().end());
        if (!sum.ring()) sum = P(term.ring());
      }
      out(i, j) = sum.ring() ? P::from_terms(sum.ring(), std::move(acc)) : P();
    }
  }
  return out;
}

template <class D>
auto scaled(const Eigen::MatrixBase<D>& m, const typename D::Scalar& c) {
  Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * c;
  }
  return out;
}

template <class D>
typename D::Scalar trace(const Eigen::MatrixBase<D>& m) {
  typename D::Scalar t;
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

/// Row-major list of entries.
template <class D>
std::vector<typename D::Scalar> entries(const Eigen::MatrixBase<D>& m) {
  std::vector<typename D::Scalar> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  }
  return out;
}

/// All 2x2 minors m(i1,j1)m(i2,j2) - m(i1,j2)m(i2,j1), i1<i2, j1<j2, in
/// lexicographic order of (i1, i2, j1, j2).
template <class D>
std::vector<typename D::Scalar> minors2(const Eigen::MatrixBase<D>& m) {
  std::vector<typename D::Scalar> out;
  for (Eigen::Index i1 = 0; i1 < m.rows(); ++i1) {
    for (Eigen::Index i2 = i1 + 1; i2 < m.rows(); ++i2) {
      for (Eigen::Index j1 = 0; j1 < m.cols(); ++j1) {
        for (Eigen::Index j2 = j1 + 1; j2 < m.cols(); ++j2) {
          out.push_back(m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1));
        }
      }
    }
  }
  return out;
}

/// Integer matrix lifted to constant polynomials of `ring`.
template <class F>
PolyMatrix<F> lift(const Eigen::MatrixXi& m, const RingPtr<F>& ring) {
  PolyMatrix<F> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Polynomial<F>::constant(ring, m(i, j));
  }
  return out;
}

}  // namespace orthochart

#endif  // ORTHOCHART_POLY_MATRIX_HPP_
