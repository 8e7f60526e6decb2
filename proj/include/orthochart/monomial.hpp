#ifndef ORTHOCHART_MONOMIAL_HPP_
#define ORTHOCHART_MONOMIAL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace orthochart {

inline constexpr std::size_t kMaxVariables = 64;
inline constexpr unsigned kMaxExponent = 127;

/// Ordered list of ring variables. Position is precedence: index 0 is the
/// greatest variable.
class VariableTable {
 public:
  VariableTable() = default;
  explicit VariableTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name).has_value(); }

  friend bool operator==(const VariableTable& a, const VariableTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct MonomialOrder {
  enum class Kind { grlex, lex, block };

  Kind kind = Kind::grlex;
  // For block orders: the first block_size variables form the eliminated
  // block. Blocks are compared lexicographically, grlex inside each block.
  std::size_t block_size = 0;

  static MonomialOrder grlex() { return {Kind::grlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

  std::string name() const;
  static MonomialOrder parse(const std::string& text);

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != Kind::block || a.block_size == b.block_size);
  }
};

/// Exponent vector over at most kMaxVariables variables with a cached
/// total degree and support mask.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial variable(std::size_t index, unsigned exponent = 1);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  unsigned exponent(std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  /// Sum of the exponents of variables [0, k).
  unsigned partial_degree(std::size_t k) const;

  bool divides(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b) { return (a.support_ & b.support_) == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.support_ == b.support_ && std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVariables) == 0;
  }

  /// Lexicographic comparison with variable 0 most significant.
  static int lex_compare(const Monomial& a, const Monomial& b) {
    const int c = std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVariables);
    return (c > 0) - (c < 0);
  }

  std::size_t hash() const;

 private:
  void refresh();

  std::array<std::uint8_t, kMaxVariables> exps_;
  std::uint16_t degree_ = 0;
  std::uint64_t support_ = 0;
};

/// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

std::string format_monomial(const Monomial& m, const VariableTable& vars);

}  // namespace orthochart

#endif  // ORTHOCHART_MONOMIAL_HPP_
