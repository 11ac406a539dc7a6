#include <cctype>
#include <limits>

#include "fsig/errors.hpp"
#include "fsig/polynomial.hpp"

namespace fsig {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), line_(line), offset_(offset) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial f = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  // expr := [+-] term ([+-] term)*
  Polynomial expr() {
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
      if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else if (peek() == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  // term := factor ('*'? factor)*
  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  // factor := primary ('^' int)?
  Polynomial factor() {
    Polynomial base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::uint64_t e = exponent();
      return base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::uint64_t r = 0;
      const std::uint64_t p = ring_->characteristic();
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        r = (r * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
        ++pos_;
      }
      (void)start;
      return Polynomial::constant(ring_, static_cast<std::int64_t>(r));
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (is_ident_char(peek())) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const int idx = ring_->index_of(name);
      if (idx < 0) fail_at(start, "unknown variable '" + name + "'");
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (at_end()) fail("unexpected end of polynomial");
    fail(std::string("unexpected '") + c + "'");
  }

  std::uint64_t exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint32_t>::max() - d) / 10) fail("exponent too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  bool starts_factor() const {
    const char c = peek();
    return c == '(' || is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
  }
  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError(what, line_, offset_ + pos + 1);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line,
                            std::size_t column_offset) {
  return PolyParser(text, ring, line, column_offset).parse();
}

}  // namespace fsig
