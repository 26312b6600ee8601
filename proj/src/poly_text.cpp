#include "algdeg/poly_text.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "algdeg/errors.hpp"

namespace algdeg {

VariableNames default_names(std::size_t num_x, std::size_t num_multipliers) {
  VariableNames names;
  names.reserve(num_x + num_multipliers);
  for (std::size_t i = 1; i <= num_x; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= num_multipliers; ++i) names.push_back("l" + std::to_string(i));
  return names;
}

VariableNames homogeneous_names(std::size_t num_x) {
  VariableNames names{"x0"};
  for (std::size_t i = 1; i <= num_x; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const Polynomial& f, const VariableNames& names) {
  if (names.size() < f.nvars()) throw ContextError("to_string: not enough variable names");
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = f.field().to_signed(t.coeff);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      out << mag;
      wrote = true;
    }
    for (std::size_t j = 0; j < f.nvars(); ++j) {
      const int e = t.mono[j];
      if (e == 0) continue;
      if (wrote) out << '*';
      out << names[j];
      if (e > 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, const VariableNames& names, std::size_t line)
      : text_(text), ring_(ring), line_(line) {
    for (std::size_t i = 0; i < names.size() && i < ring->nvars(); ++i) index_.emplace(names[i], i);
  }

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  // expression := ['+'|'-'] term (('+'|'-') term)*
  Polynomial expression() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  // factor := ['-'] primary ['^' integer]
  Polynomial factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    Polynomial base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent after '^'");
      std::uint64_t e = integer();
      if (e > std::numeric_limits<std::uint16_t>::max()) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, literal());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = index_.find(name);
      if (it == index_.end()) fail("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, it->second);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::uint64_t integer() {
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) fail("integer literal too large", start);
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  // Arbitrary-length literal reduced mod p digit by digit.
  Coeff literal() {
    const auto& field = ring_->field();
    Coeff v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = field.mul_add(v, field.from_uint(10), field.from_uint(static_cast<std::uint64_t>(text_[pos_] - '0')));
      ++pos_;
    }
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, line_, at + 1); }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const VariableNames& names,
                            std::size_t line) {
  return Parser(text, ring, names, line).parse();
}

}  // namespace algdeg
