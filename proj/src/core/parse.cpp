#include <cctype>
#include <string>

#include "core/error.hpp"
#include "core/poly.hpp"

namespace realroot {

namespace {

// Recursive-descent parser for the expression form:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := rational | 'x' | '(' expr ')'
//
// Rationals are literals "a" or "a/b"; '/' is not a general operator.
// Implicit multiplication is rejected, exponents must be nonnegative.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + char_here() + "'");
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  std::string char_here() const {
    if (pos_ >= text_.size()) return "end of input";
    return std::string(1, text_[pos_]);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    bool negate = false;
    skip_ws();
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (!eat('^')) return b;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    unsigned long e = natural();
    Poly acc = Poly::constant(1);
    for (unsigned long i = 0; i < e; ++i) acc = acc * b;
    return acc;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        fail("unexpected variable '" + std::string(1, text_[pos_]) + "'");
      }
      return Poly::x();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      fail("unexpected variable '" + std::string(1, c) + "'; only x is allowed");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(rational_literal());
    fail("unexpected '" + std::string(1, c) + "'");
  }

  unsigned long natural() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an exponent");
    }
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 65535) fail("exponent too large");
      ++pos_;
    }
    return v;
  }

  Rational rational_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t num_end = pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den_start) fail("expected a denominator");
    }
    std::string_view lit = text_.substr(start, pos_ - start);
    if (num_end - start == 0) fail("expected a number");
    try {
      return rational_from_string(lit);
    } catch (const Error& e) {
      throw ParseError(start, e.what());
    }
  }
};

}  // namespace

Poly parse_poly_expression(std::string_view text) { return ExprParser(text).parse(); }

Poly parse_poly_coeff_list(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  bool had_token_since_comma = true;  // a leading comma is an error
  bool any_token = false;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == ',') {
      if (!had_token_since_comma) throw ParseError(pos, "empty list entry");
      had_token_since_comma = false;
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != ',') {
      ++pos;
    }
    try {
      coeffs.push_back(rational_from_string(text.substr(start, pos - start)));
    } catch (const Error& e) {
      throw ParseError(start, e.what());
    }
    had_token_since_comma = true;
    any_token = true;
  }
  if (!had_token_since_comma) throw ParseError(text.size(), "trailing comma");
  if (!any_token) throw ParseError(0, "empty polynomial input");
  return Poly(std::move(coeffs));
}

Poly parse_poly(std::string_view text) {
  if (text.find('x') != std::string_view::npos) return parse_poly_expression(text);
  return parse_poly_coeff_list(text);
}

}  // namespace realroot
