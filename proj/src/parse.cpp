#include "pflab/parse.hpp"

#include <cctype>
#include <vector>

#include "pflab/errors.hpp"

namespace pflab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BiPoly parse_full_poly() {
    BiPoly p = parse_poly();
    skip_ws();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return p;
  }

  KForm parse_full_form() {
    skip_ws();
    if (peek() != '[') return KForm::function(parse_full_poly());
    advance();
    std::vector<BiPoly> parts;
    parts.push_back(parse_poly());
    skip_ws();
    while (peek() == ',') {
      advance();
      parts.push_back(parse_poly());
      skip_ws();
    }
    expect(']');
    skip_ws();
    if (!at_end()) fail("unexpected character after form literal");
    if (parts.size() == 1) return KForm::two_form(std::move(parts[0]));
    if (parts.size() == 2) return KForm::one_form(std::move(parts[0]), std::move(parts[1]));
    fail("form literal must have one or two components");
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (at_end()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, col_); }
  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      if (at_end()) fail(std::string("expected '") + c + "' but reached end of input");
      fail(std::string("expected '") + c + "' but found '" + peek() + "'");
    }
    advance();
  }

  std::string parse_digits() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      if (at_end()) fail("expected a number but reached end of input");
      fail("expected a number but found '" + std::string(1, peek()) + "'");
    }
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return digits;
  }

  int parse_exponent() {
    std::string digits = parse_digits();
    if (digits.size() > 6) fail("exponent too large");
    return std::stoi(digits);
  }

  BiPoly parse_poly() {
    skip_ws();
    BiPoly sum;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      advance();
    }
    BiPoly t = parse_term();
    sum += negate ? -t : t;
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negate = peek() == '-';
      advance();
      t = parse_term();
      sum += negate ? -t : t;
    }
    return sum;
  }

  BiPoly parse_term() {
    BiPoly prod = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        advance();
        prod = prod * parse_factor();
      } else if (peek() == '/') {
        // Division by a rational constant, e.g. y^3/3.
        advance();
        Rational d(parse_digits());
        if (d == 0) fail("zero denominator");
        prod = prod * Coefficient(Rational(1) / d);
      } else {
        break;
      }
    }
    return prod;
  }

  BiPoly parse_factor() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(parse_digits());
      skip_ws();
      if (peek() == '/') {
        advance();
        std::string den = parse_digits();
        Rational d(den);
        if (d == 0) fail("zero denominator");
        value /= d;
      }
      value.canonicalize();
      skip_ws();
      if (peek() == 'i') {
        advance();
        return BiPoly(Coefficient(Rational(0), value));
      }
      return BiPoly(Coefficient(value));
    }
    if (c == 'i') {
      advance();
      return BiPoly(Coefficient::imaginary_unit());
    }
    if (c == 'x' || c == 'y') {
      advance();
      int e = 1;
      skip_ws();
      if (peek() == '^') {
        advance();
        e = parse_exponent();
      }
      return c == 'x' ? BiPoly::monomial(e, 0) : BiPoly::monomial(0, e);
    }
    if (c == '(') {
      advance();
      BiPoly inner = parse_poly();
      expect(')');
      skip_ws();
      if (peek() == '^') {
        advance();
        const int e = parse_exponent();
        if (e > 64) fail("exponent of a group too large");
        inner = inner.pow(e);
      }
      return inner;
    }
    if (at_end()) fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }
};

}  // namespace

BiPoly parse_bipoly(std::string_view text) { return Parser(text).parse_full_poly(); }

KForm parse_kform(std::string_view text) { return Parser(text).parse_full_form(); }

}  // namespace pflab
