#pragma once

#include <climits>
#include <stdexcept>
#include <string>
#include <utility>

#include "jrl/arith/polynomial.hpp"

namespace jrl::arith {

/// Valuation of the zero function.
inline constexpr int kInfiniteValuation = INT_MAX / 4;

/// Elements of Q(t), kept as num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(RationalPolynomial num) : num_(std::move(num)), den_(Rational(1)) {}
  RationalFunction(RationalPolynomial num, RationalPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }

  static RationalFunction t() { return RationalFunction(RationalPolynomial::x()); }

  const RationalPolynomial& numerator() const { return num_; }
  const RationalPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  /// Idempotent canonical form.
  RationalFunction normalized() const {
    RationalFunction r = *this;
    r.normalize();
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction pow(unsigned e) const { return {num_.pow(e), den_.pow(e)}; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Order of vanishing at the finite place cut out by the nonconstant polynomial g.
  int valuation(const RationalPolynomial& g) const {
    if (g.degree() < 1) throw std::invalid_argument("valuation at a constant polynomial");
    if (is_zero()) return kInfiniteValuation;
    return multiplicity(num_, g) - multiplicity(den_, g);
  }

  /// Order of vanishing at t = infinity.
  int valuation_at_infinity() const {
    if (is_zero()) return kInfiniteValuation;
    return den_.degree() - num_.degree();
  }

  std::string to_string(const std::string& var = "t") const {
    if (den_.degree() == 0) return arith::to_string(num_, var);
    return "(" + arith::to_string(num_, var) + ")/(" + arith::to_string(den_, var) + ")";
  }

  static int multiplicity(RationalPolynomial f, const RationalPolynomial& g) {
    int m = 0;
    while (!f.is_zero()) {
      auto [q, r] = divmod(f, g);
      if (!r.is_zero()) break;
      f = std::move(q);
      ++m;
    }
    return m;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = RationalPolynomial(Rational(1));
      return;
    }
    RationalPolynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    Rational lc = den_.leading();
    if (lc != 1) {
      Rational inv = 1 / lc;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  RationalPolynomial num_;
  RationalPolynomial den_;
};

}  // namespace jrl::arith
