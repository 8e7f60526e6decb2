#include "orthochart/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <tuple>

#include "orthochart/errors.hpp"

namespace orthochart {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  ParsedPolynomial parse() {
    ParsedPolynomial out;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_space();
    }
    out.push_back(term(negative));
    while (!at_end()) {
      const char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      skip_space();
      out.push_back(term(c == '-'));
    }
    return out;
  }

 private:
  ParsedTerm term(bool negative) {
    ParsedTerm t{Rational(negative ? -1 : 1), {}};
    for (;;) {
      skip_space();
      if (at_end()) fail("expected a coefficient or factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coefficient *= number();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        auto name = identifier();
        unsigned e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          get();
          skip_space();
          e = exponent();
        }
        if (e > 0) t.factors.emplace_back(std::move(name), e);
      } else {
        fail("unexpected character");
      }
      skip_space();
      if (at_end() || peek() != '*') break;
      get();
    }
    return t;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail("missing denominator");
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  unsigned exponent() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 4) fail("bad exponent");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  std::string identifier() {
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += get();
    while (!at_end() && peek() == '[') {
      name += get();
      skip_space();
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected an index");
      name += std::to_string(std::stoul(std::string(text_.substr(start, pos_ - start))));
      skip_space();
      if (at_end() || peek() != ']') fail("expected ']'");
      name += get();
    }
    return name;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// (is pi, base name, numeric indices)
std::tuple<bool, std::string, std::vector<unsigned long>> precedence_key(const std::string& name) {
  const auto bracket = name.find('[');
  std::string base = name.substr(0, bracket);
  std::vector<unsigned long> indices;
  for (auto pos = bracket; pos != std::string::npos; pos = name.find('[', pos + 1)) {
    indices.push_back(std::stoul(name.substr(pos + 1)));
  }
  const bool is_pi = name == "pi";
  return {is_pi, std::move(base), std::move(indices)};
}

}  // namespace

ParsedPolynomial parse_polynomial_text(std::string_view text) { return Scanner(text).parse(); }

void sort_variables_canonically(std::vector<std::string>& names) {
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return precedence_key(a) < precedence_key(b); });
}

std::vector<std::string> canonical_variable_order(const std::vector<ParsedPolynomial>& polys) {
  std::set<std::string> seen;
  for (const auto& p : polys) {
    for (const auto& t : p) {
      for (const auto& f : t.factors) seen.insert(f.first);
    }
  }
  std::vector<std::string> names(seen.begin(), seen.end());
  sort_variables_canonically(names);
  return names;
}

std::vector<std::string> read_polynomial_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace orthochart
