#pragma once

// Dense univariate polynomials over an exact field.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace jrl::arith {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(T constant) {
    if (!(constant == T(0))) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<T> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Polynomial monomial(T c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  template <class U>
  U evaluate(const U& at) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = U(acc * at + U(*it));
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = T(coeffs_[i] * T(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    T lc = leading();
    std::vector<T> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = T(coeffs_[i] / lc);
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = T(coeffs_[i] + o.coeffs_[i]);
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = T(coeffs_[i] - o.coeffs_[i]);
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = T(v[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const T& s) const {
    std::vector<T> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = T(coeffs_[i] * s);
    return Polynomial(std::move(v));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result(T(1)), base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Euclidean division; throws on a zero divisor.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<T> rem = a.coeffs_;
    std::vector<T> quo(a.coeffs_.size() - b.coeffs_.size() + 1, T(0));
    const T lc = b.leading();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      T q = T(rem[i + b.degree()] / lc);
      quo[i] = q;
      if (q == T(0)) continue;
      for (int j = 0; j <= b.degree(); ++j) rem[i + j] = T(rem[i + j] - q * b.coeffs_[j]);
    }
    rem.resize(b.coeffs_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  /// Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;  // ascending powers
};

using RationalPolynomial = Polynomial<Rational>;

/// Human-readable form, highest degree first, e.g. "t^2 - t + 1".
inline std::string to_string(const RationalPolynomial& f, const std::string& var = "t") {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Rational c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) out << mag.get_str();
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

/// Primitive integer polynomial proportional to f with positive leading coefficient.
inline std::vector<Integer> primitive_integer_coefficients(const RationalPolynomial& f) {
  if (f.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> v;
  Integer content = 0;
  for (const auto& c : f.coefficients()) {
    Integer z = c.get_num() * (den_lcm / c.get_den());
    v.push_back(z);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  }
  if (f.leading() < 0) content = -content;
  for (auto& z : v) z /= content;
  return v;
}

/// Content c with f = c * (primitive integer polynomial with positive leading coefficient).
inline Rational rational_content(const RationalPolynomial& f) {
  if (f.is_zero()) return 0;
  auto prim = primitive_integer_coefficients(f);
  return Rational(f.leading() / Rational(prim.back()));
}

}  // namespace jrl::arith
