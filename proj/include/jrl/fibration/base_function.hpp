#pragma once

// Functions on the base curve. Over the projective line these are elements of
// Q(t). Over an elliptic base y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// they are A(x) + y B(x), reduced with y^2 = F(x) - (a1 x + a3) y.

#include <memory>
#include <stdexcept>
#include <string>

#include "jrl/arith/expression.hpp"
#include "jrl/arith/rational_function.hpp"
#include "jrl/curves/weierstrass.hpp"

namespace jrl::fibration {

using arith::Rational;
using arith::RationalFunction;
using arith::RationalPolynomial;

struct EllipticRelation {
  RationalPolynomial linear;  // a1 x + a3
  RationalPolynomial cubic;   // x^3 + a2 x^2 + a4 x + a6

  static std::shared_ptr<const EllipticRelation> from(const curves::WeierstrassCoefficients<Rational>& a) {
    auto rel = std::make_shared<EllipticRelation>();
    rel->linear = RationalPolynomial(std::vector<Rational>{a.a3, a.a1});
    rel->cubic = RationalPolynomial(std::vector<Rational>{a.a6, a.a4, a.a2, Rational(1)});
    return rel;
  }
};

class BaseFunction {
 public:
  BaseFunction() = default;
  BaseFunction(long c) : a_(c) {}                  // NOLINT(google-explicit-constructor)
  BaseFunction(const Rational& c) : a_(c) {}       // NOLINT(google-explicit-constructor)
  BaseFunction(RationalFunction a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  BaseFunction(RationalFunction a, RationalFunction b, std::shared_ptr<const EllipticRelation> rel)
      : a_(std::move(a)), b_(std::move(b)), rel_(std::move(rel)) {}

  /// The coordinate function t on the projective line.
  static BaseFunction t() { return BaseFunction(RationalFunction::t()); }
  static BaseFunction x(std::shared_ptr<const EllipticRelation> rel) {
    return {RationalFunction::t(), RationalFunction(), std::move(rel)};
  }
  static BaseFunction y(std::shared_ptr<const EllipticRelation> rel) {
    return {RationalFunction(), RationalFunction(1L), std::move(rel)};
  }

  const RationalFunction& a() const { return a_; }
  const RationalFunction& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_constant() const { return a_.is_constant() && b_.is_zero(); }
  bool is_polynomial() const { return a_.is_polynomial() && b_.is_polynomial(); }

  friend BaseFunction operator+(const BaseFunction& u, const BaseFunction& v) {
    return {u.a_ + v.a_, u.b_ + v.b_, pick(u, v)};
  }
  friend BaseFunction operator-(const BaseFunction& u, const BaseFunction& v) {
    return {u.a_ - v.a_, u.b_ - v.b_, pick(u, v)};
  }
  friend BaseFunction operator-(const BaseFunction& u) { return {-u.a_, -u.b_, u.rel_}; }
  friend BaseFunction operator*(const BaseFunction& u, const BaseFunction& v) {
    auto rel = pick(u, v);
    if (u.b_.is_zero() || v.b_.is_zero()) return {u.a_ * v.a_, u.a_ * v.b_ + u.b_ * v.a_, rel};
    RationalFunction bb = u.b_ * v.b_;
    RationalFunction lin(rel->linear), cub(rel->cubic);
    return {u.a_ * v.a_ + cub * bb, u.a_ * v.b_ + u.b_ * v.a_ - lin * bb, rel};
  }

  /// Division is limited to Q(t) over the projective line and to nonzero
  /// constants over an elliptic base.
  friend BaseFunction operator/(const BaseFunction& u, const BaseFunction& v) {
    if (v.is_zero()) throw std::domain_error("division by zero");
    if (!v.b_.is_zero() || (pick(u, v) && !v.is_constant())) {
      throw std::domain_error("only constant denominators are supported over an elliptic base");
    }
    return {u.a_ / v.a_, u.b_ / v.a_, pick(u, v)};
  }

  friend bool operator==(const BaseFunction& u, const BaseFunction& v) { return u.a_ == v.a_ && u.b_ == v.b_; }

  std::string to_string(bool elliptic) const {
    if (!elliptic) return a_.to_string("t");
    if (b_.is_zero()) return a_.to_string("x");
    std::string s = a_.is_zero() ? "" : a_.to_string("x") + " + ";
    return s + "y*(" + b_.to_string("x") + ")";
  }

 private:
  static std::shared_ptr<const EllipticRelation> pick(const BaseFunction& u, const BaseFunction& v) {
    return u.rel_ ? u.rel_ : v.rel_;
  }

  RationalFunction a_;
  RationalFunction b_;
  std::shared_ptr<const EllipticRelation> rel_;
};

/// Parses a function on the projective line (rel == nullptr, variable t) or
/// on an elliptic base (variables x and y).
inline BaseFunction parse_base_function(const std::string& text, std::shared_ptr<const EllipticRelation> rel) {
  arith::ExpressionContext<BaseFunction> ctx;
  ctx.constant = [](const Rational& q) { return BaseFunction(q); };
  if (rel) {
    ctx.variables.emplace("x", BaseFunction::x(rel));
    ctx.variables.emplace("y", BaseFunction::y(rel));
  } else {
    ctx.variables.emplace("t", BaseFunction::t());
  }
  ctx.divide = [](const BaseFunction& u, const BaseFunction& v) {
    try {
      return u / v;
    } catch (const std::domain_error& e) {
      throw arith::ParseError(e.what());
    }
  };
  return arith::parse_expression(text, ctx);
}

inline Rational parse_rational(const std::string& text) {
  arith::ExpressionContext<Rational> ctx;
  ctx.constant = [](const Rational& q) { return q; };
  ctx.divide = [](const Rational& u, const Rational& v) {
    if (v == 0) throw arith::ParseError("division by zero");
    return Rational(u / v);
  };
  return arith::parse_expression(text, ctx);
}

}  // namespace jrl::fibration
