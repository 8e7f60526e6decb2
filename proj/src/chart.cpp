#include "orthochart/chart.hpp"

#include <algorithm>

#include "orthochart/errors.hpp"

namespace orthochart {

std::string to_string(ParityCase c) {
  switch (c) {
    case ParityCase::EE: return "EE";
    case ParityCase::EO: return "EO";
    case ParityCase::OE: return "OE";
    case ParityCase::OO: return "OO";
  }
  return "?";
}

namespace {

void validate(int d, int l) {
  if (d < 5) throw InvalidChart("d must be at least 5, got " + std::to_string(d));
  if (l <= 1 || l >= d - 1) {
    throw InvalidChart("need 1 < l < d - 1, got d = " + std::to_string(d) + ", l = " + std::to_string(l));
  }
}

ParityCase parity_of(int d, int l) {
  if (d % 2 == 0) return l % 2 == 0 ? ParityCase::EE : ParityCase::EO;
  return l % 2 == 0 ? ParityCase::OE : ParityCase::OO;
}

}  // namespace

GramPair gram_matrices(int d, int l) {
  validate(d, l);
  const int n = d / 2, r = l / 2;
  GramPair g{Eigen::MatrixXi::Zero(d, d), Eigen::MatrixXi::Zero(d, d)};
  // Antidiagonal entry of row i (1-based) goes to G1 when pi_row(i).
  auto fill_antidiagonal = [&](auto pi_row) {
    for (int i = 1; i <= d; ++i) (pi_row(i) ? g.G1 : g.G0)(i - 1, d - i) = 1;
  };
  switch (parity_of(d, l)) {
    case ParityCase::EE:
      fill_antidiagonal([&](int i) { return i >= n - r + 1 && i <= n + r; });
      break;
    case ParityCase::OO:
      fill_antidiagonal([&](int i) { return i >= n + 1 - r && i <= n + 1 + r; });
      break;
    case ParityCase::OE:
      fill_antidiagonal([&](int i) { return i >= n + 1 - r && i <= n + 1 + r && i != n + 1; });
      break;
    case ParityCase::EO:
      fill_antidiagonal([&](int i) { return i >= n - r && i <= n + r + 1; });
      // Rows n and n+1 leave the antidiagonal: <e_n,e_n> = pi, <e_{n+1},e_{n+1}> = 1.
      g.G1(n - 1, n) = g.G1(n, n - 1) = 0;
      g.G0(n - 1, n) = g.G0(n, n - 1) = 0;
      g.G1(n - 1, n - 1) = 1;
      g.G0(n, n) = 1;
      break;
  }
  return g;
}

ChartPresentation::ChartPresentation(int d, int l) : d_(d), l_(l), parity_(parity_of(d, l)), gram_(gram_matrices(d, l)) {
  for (int i = 1; i <= d; ++i) {
    (gram_.G1.row(i - 1).any() ? Z_ : Zc_).push_back(i);
  }
  // The middle block spans Z plus, for opposite parity, the column n+1.
  const int middle_size = same_parity() ? l : l + 1;
  const int w = (d - middle_size) / 2;
  for (int j = 1; j <= w; ++j) {
    left_.push_back(j);
    right_.push_back(d - w + j);
  }
  if (!same_parity()) middle_ = n() + 1;
}

std::string ChartPresentation::id() const { return "(" + std::to_string(d_) + "," + std::to_string(l_) + ")"; }

int ChartPresentation::sigma1(int a) const {
  for (int b = 1; b <= d_; ++b) {
    if (gram_.G1(a - 1, b - 1) != 0) return b;
  }
  throw InvalidInput("row " + std::to_string(a) + " is not in Z");
}

int ChartPresentation::sigma0(int s) const {
  for (int b = 1; b <= d_; ++b) {
    if (gram_.G0(s - 1, b - 1) != 0) return b;
  }
  throw InvalidInput("row " + std::to_string(s) + " is not in Zc");
}

bool ChartPresentation::in_Z(int i) const { return std::binary_search(Z_.begin(), Z_.end(), i); }

std::string ChartPresentation::x(int i, int j) { return "x[" + std::to_string(i) + "][" + std::to_string(j) + "]"; }

std::vector<std::string> ChartPresentation::full_variables() const {
  std::vector<std::string> out;
  for (int i = 1; i <= d_; ++i) {
    for (int j = 1; j <= d_; ++j) out.push_back(x(i, j));
  }
  out.push_back("pi");
  return out;
}

std::vector<std::string> ChartPresentation::reduced_variables() const {
  std::vector<std::string> out;
  for (int t : Z_) {
    for (int s : Zc_) out.push_back(x(t, s));
  }
  out.push_back("pi");
  return out;
}

std::vector<std::string> ChartPresentation::elimination_variables() const {
  std::vector<std::string> out;
  for (int k : Zc_) {
    for (int j = 1; j <= d_; ++j) out.push_back(x(k, j));
  }
  for (int a : Z_) {
    for (int b : Z_) out.push_back(x(a, b));
  }
  for (const auto& v : reduced_variables()) out.push_back(v);
  return out;
}

int ChartPresentation::expected_components() const { return Z_.size() == 2 || Zc_.size() == 2 ? 3 : 2; }

}  // namespace orthochart
