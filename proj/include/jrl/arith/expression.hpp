#pragma once

// Recursive-descent parser for arithmetic expressions such as
// "-(1+t)", "t^2 - t^3 + t", "16t^2(t-1)^2" or "1/(t-1)". The result is
// evaluated directly into any ring that supports +, -, * and a caller-provided
// division.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | <implicit>) unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace jrl::arith {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Ring>
struct ExpressionContext {
  std::function<Ring(const mpq_class&)> constant;
  std::map<std::string, Ring, std::less<>> variables;
  std::function<Ring(const Ring&, const Ring&)> divide;
};

namespace detail {

template <class Ring>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const ExpressionContext<Ring>& ctx) : text_(text), ctx_(ctx) {}

  Ring parse() {
    Ring value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary() {
    char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Ring expr() {
    Ring value = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        value = value + term();
      } else if (c == '-') {
        ++pos_;
        value = value - term();
      } else {
        return value;
      }
    }
  }

  Ring term() {
    Ring value = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        value = value * unary();
      } else if (c == '/') {
        ++pos_;
        if (!ctx_.divide) fail("division is not supported here");
        value = ctx_.divide(value, unary());
      } else if (starts_primary()) {
        value = value * power();
      } else {
        return value;
      }
    }
  }

  Ring unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return ctx_.constant(mpq_class(0)) - unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Ring power() {
    Ring base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 4096) fail("exponent too large");
    Ring result = ctx_.constant(mpq_class(1));
    for (unsigned long i = 0; i < e; ++i) result = result * base;
    return result;
  }

  Ring primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Ring value = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class z(std::string(text_.substr(start, pos_ - start)));
      return ctx_.constant(mpq_class(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto it = ctx_.variables.find(name);
      if (it == ctx_.variables.end()) {
        // "2t" lexes as a number followed by an identifier; "tx" is rejected.
        fail("unknown variable '" + std::string(name) + "'");
      }
      return it->second;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const ExpressionContext<Ring>& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class Ring>
Ring parse_expression(std::string_view text, const ExpressionContext<Ring>& ctx) {
  return detail::ExpressionParser<Ring>(text, ctx).parse();
}

}  // namespace jrl::arith
