#ifndef ORTHOCHART_CHART_HPP_
#define ORTHOCHART_CHART_HPP_

#include <Eigen/Core>

#include <string>
#include <vector>

namespace orthochart {

enum class ParityCase { EE, EO, OE, OO };

std::string to_string(ParityCase c);

/// Pairing <e_i, e_j> = G0(i,j) + pi * G1(i,j) of the standard basis.
struct GramPair {
  Eigen::MatrixXi G0;
  Eigen::MatrixXi G1;
};

/// Index data of the affine chart of U_{d,l} at the worst point. All
/// indices are 1-based as in the matrix X = (x[i][j]).
class ChartPresentation {
 public:
  /// Requires d >= 5 and 1 < l < d - 1; throws InvalidChart otherwise.
  ChartPresentation(int d, int l);

  int d() const { return d_; }
  int l() const { return l_; }
  int n() const { return d_ / 2; }
  int r() const { return l_ / 2; }
  int r_prime() const { return l_ % 2 == 0 ? r() : r() + 1; }
  ParityCase parity() const { return parity_; }
  bool same_parity() const { return parity_ == ParityCase::EE || parity_ == ParityCase::OO; }
  std::string id() const;

  const GramPair& gram() const { return gram_; }

  // Z: rows where the pi-part of the form lives; Zc its complement.
  const std::vector<int>& Z() const { return Z_; }
  const std::vector<int>& Zc() const { return Zc_; }
  // Column blocks: X = (B1 | middle | B2) restricted to the rows Z.
  const std::vector<int>& left_columns() const { return left_; }
  const std::vector<int>& right_columns() const { return right_; }
  // n+1 for opposite parity (the Q column), 0 otherwise.
  int middle_column() const { return middle_; }

  // Partner of a in Z under G1, and of s in Zc under G0.
  int sigma1(int a) const;
  int sigma0(int s) const;

  bool in_Z(int i) const;

  static std::string x(int i, int j);
  /// x[1][1], ..., x[d][d], pi.
  std::vector<std::string> full_variables() const;
  /// x[t][s] for t in Z, s in Zc (row-major), then pi.
  std::vector<std::string> reduced_variables() const;
  /// Full variables ordered for elimination: rows Zc, then the A block
  /// (rows Z, columns Z), then the reduced variables. The first
  /// eliminated_count() of them form the eliminated block.
  std::vector<std::string> elimination_variables() const;
  std::size_t eliminated_count() const { return static_cast<std::size_t>(d_ * d_) - Z_.size() * Zc_.size(); }

  /// Number of irreducible components expected in the special fiber.
  int expected_components() const;

 private:
  int d_, l_;
  ParityCase parity_;
  GramPair gram_;
  std::vector<int> Z_, Zc_, left_, right_;
  int middle_ = 0;
};

GramPair gram_matrices(int d, int l);

}  // namespace orthochart

#endif  // ORTHOCHART_CHART_HPP_
