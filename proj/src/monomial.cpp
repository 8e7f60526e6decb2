#include "orthochart/monomial.hpp"

#include <algorithm>
#include <functional>
#include <string_view>

#include "orthochart/errors.hpp"

namespace orthochart {

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw InvalidInput("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw InvalidInput("duplicate variable " + names_[i]);
  }
}

std::optional<std::size_t> VariableTable::index_of(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::grlex: return "grlex";
    case Kind::lex: return "lex";
    case Kind::block: return "block(" + std::to_string(block_size) + ")";
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "grlex") return grlex();
  if (text == "lex") return lex();
  constexpr std::string_view prefix = "block(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    const auto inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    try {
      return block(std::stoul(inner));
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("unknown monomial order '" + text + "'");
}

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  if (index >= kMaxVariables) throw InvalidInput("variable index out of range");
  if (exponent > kMaxExponent) throw ExponentOverflow();
  Monomial m;
  m.exps_[index] = static_cast<std::uint8_t>(exponent);
  m.refresh();
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw InvalidInput("too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent) throw ExponentOverflow();
    m.exps_[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  m.refresh();
  return m;
}

void Monomial::refresh() {
  unsigned deg = 0;
  std::uint64_t supp = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    deg += exps_[i];
    if (exps_[i] != 0) supp |= std::uint64_t{1} << i;
  }
  degree_ = static_cast<std::uint16_t>(deg);
  support_ = supp;
}

unsigned Monomial::partial_degree(std::size_t k) const {
  unsigned deg = 0;
  for (std::size_t i = 0; i < k; ++i) deg += exps_[i];
  return deg;
}

bool Monomial::divides(const Monomial& other) const {
  if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    overflow |= e > kMaxExponent;
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  if (overflow) throw ExponentOverflow();
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  m.support_ = a.support_ | b.support_;
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  }
  m.refresh();
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  m.refresh();
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(support_);
  for (std::size_t i = 0; i < kMaxVariables; i += 8) {
    std::uint64_t word;
    std::memcpy(&word, exps_.data() + i, sizeof word);
    h ^= std::hash<std::uint64_t>{}(word) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  switch (order.kind) {
    case MonomialOrder::Kind::lex:
      return Monomial::lex_compare(a, b);
    case MonomialOrder::Kind::grlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return Monomial::lex_compare(a, b);
    case MonomialOrder::Kind::block: {
      const unsigned da = a.partial_degree(order.block_size);
      const unsigned db = b.partial_degree(order.block_size);
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = 0; i < order.block_size; ++i) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
      }
      const unsigned ra = a.degree() - da, rb = b.degree() - db;
      if (ra != rb) return ra > rb ? 1 : -1;
      return Monomial::lex_compare(a, b);
    }
  }
  return 0;
}

std::string format_monomial(const Monomial& m, const VariableTable& vars) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace orthochart
