#pragma once

// Integral models of the fiber: polynomial coefficients on the affine part of
// the base and the fiber over the point at infinity.
//
// Projective line: poles are cleared by x -> u^2 x, y -> u^3 y with u a product
// of denominator factors. At t = infinity the chart s = 1/t with twist
// k = max ceil(deg a_i / w_i) gives a_i^inf(s) = s^(w_i k) a_i(1/s); the fiber
// at s = 0 has coefficients [t^(w_i k)] a_i.
//
// Elliptic base: poles only at O, where x and y have orders 2 and 3. With
// d_i the pole order of a_i and k = max ceil(d_i / w_i), the fiber at O keeps
// the leading coefficient of each a_i with d_i = w_i k, signed by (-1)^b for
// the y^b term (uniformizer -x/y).

#include <algorithm>
#include <vector>

#include "jrl/arith/factor.hpp"
#include "jrl/fibration/surface.hpp"

namespace jrl::fibration {

struct IntegralModel {
  std::vector<RationalPolynomial> a;  // coefficient A_j(t) or A_j(x)
  std::vector<RationalPolynomial> b;  // B_j(x), zero over the projective line
  std::vector<Rational> at_infinity;
  int infinity_twist = 0;
  RationalFunction scaling{1L};  // u over the projective line
};

namespace detail {

inline int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

/// Pole order at O of A(x) + y B(x); -1 for the zero function.
inline int pole_order_at_origin(const RationalPolynomial& A, const RationalPolynomial& B) {
  int d = -1;
  if (!A.is_zero()) d = std::max(d, 2 * A.degree());
  if (!B.is_zero()) d = std::max(d, 2 * B.degree() + 3);
  return d;
}

}  // namespace detail

inline IntegralModel integral_model(const SurfaceSpec& spec) {
  const auto w = spec.weights();
  const std::size_t n = spec.coefficients.size();
  IntegralModel m;

  if (spec.over_elliptic_base()) {
    std::vector<int> d(n);
    for (std::size_t j = 0; j < n; ++j) {
      m.a.push_back(spec.coefficients[j].a().numerator().scaled(1 / spec.coefficients[j].a().denominator().leading()));
      m.b.push_back(spec.coefficients[j].b().numerator().scaled(1 / spec.coefficients[j].b().denominator().leading()));
      d[j] = detail::pole_order_at_origin(m.a[j], m.b[j]);
      m.infinity_twist = std::max(m.infinity_twist, detail::ceil_div(std::max(d[j], 0), w[j]));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const int k = m.infinity_twist * w[j];
      Rational c = 0;
      if (d[j] == k && k >= 0) {
        c = (k % 2 == 0) ? m.a[j].leading() : Rational(-m.b[j].leading());
      }
      m.at_infinity.push_back(c);
    }
    return m;
  }

  // Clear poles at finite places.
  std::vector<RationalPolynomial> dens;
  for (const auto& c : spec.coefficients)
    if (c.a().denominator().degree() > 0) dens.push_back(c.a().denominator());
  RationalFunction u(1L);
  for (const auto& g : arith::coprime_base(dens)) {
    int e = 0;
    for (std::size_t j = 0; j < n; ++j) {
      int pole = RationalFunction::multiplicity(spec.coefficients[j].a().denominator(), g.poly);
      e = std::max(e, detail::ceil_div(pole, w[j]));
    }
    u = u * RationalFunction(g.poly).pow(static_cast<unsigned>(e));
  }
  m.scaling = u;
  int twist = 0;
  for (std::size_t j = 0; j < n; ++j) {
    RationalFunction scaled = spec.coefficients[j].a() * u.pow(static_cast<unsigned>(w[j]));
    if (!scaled.is_polynomial()) throw std::logic_error("pole clearing left a denominator");
    m.a.push_back(scaled.numerator().scaled(1 / scaled.denominator().leading()));
    m.b.emplace_back();
    if (!m.a[j].is_zero()) twist = std::max(twist, detail::ceil_div(m.a[j].degree(), w[j]));
  }
  m.infinity_twist = twist;
  for (std::size_t j = 0; j < n; ++j)
    m.at_infinity.push_back(m.a[j].coeff(static_cast<std::size_t>(w[j] * twist)));
  return m;
}

}  // namespace jrl::fibration
