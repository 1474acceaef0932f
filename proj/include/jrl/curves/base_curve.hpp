#pragma once

// Base curves of a fibration: the projective line or an elliptic curve over Q.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "jrl/arith/polynomial.hpp"
#include "jrl/arith/prime_field.hpp"
#include "jrl/curves/elliptic_group.hpp"
#include "jrl/curves/weierstrass.hpp"

namespace jrl::curves {

using arith::Rational;

struct ProjectiveLine {};

struct EllipticBase {
  WeierstrassCoefficients<Rational> a;

  explicit EllipticBase(WeierstrassCoefficients<Rational> coeffs) : a(std::move(coeffs)) {
    if (a.discriminant() == 0) throw std::invalid_argument("elliptic base curve is singular over Q");
  }

  /// True when p divides a denominator or the discriminant.
  bool bad_reduction_at(std::uint64_t p) const {
    PrimeField F(p);
    for (const auto& c : a.as_array())
      if (!F.reducible(c)) return true;
    return discriminant_mod_p(reduce(p)) == 0;
  }

  EllipticFiberModP reduce(std::uint64_t p) const {
    PrimeField F(p);
    return {p, F.from_rational(a.a1), F.from_rational(a.a2), F.from_rational(a.a3), F.from_rational(a.a4),
            F.from_rational(a.a6)};
  }
};

using BaseCurve = std::variant<ProjectiveLine, EllipticBase>;

/// For the projective line, x carries the coordinate t and y is unused.
using BasePointModP = CurvePoint;

inline int genus(const BaseCurve& base) { return std::holds_alternative<ProjectiveLine>(base) ? 0 : 1; }

/// Affine points sorted by (x, y), then the point at infinity.
inline std::vector<BasePointModP> enumerate_base_points(const BaseCurve& base, std::uint64_t p) {
  if (p < 5) throw std::invalid_argument("enumerate_base_points: p must be >= 5, got " + std::to_string(p));
  PrimeField F(p);
  std::vector<BasePointModP> points;
  if (std::holds_alternative<ProjectiveLine>(base)) {
    points.reserve(p + 1);
    for (Residue t = 0; t < p; ++t) points.push_back(CurvePoint::affine(t, 0));
    points.push_back(CurvePoint::at_infinity());
    return points;
  }
  const auto& E = std::get<EllipticBase>(base);
  if (E.bad_reduction_at(p)) throw std::domain_error("base curve has bad reduction at " + std::to_string(p));
  const EllipticFiberModP c = E.reduce(p);

  // root[s] is some r with r^2 = s, or p when s is a non-square.
  std::vector<Residue> root(p, p);
  for (Residue r = 0; r <= p / 2; ++r) root[F.mul(r, r)] = r;
  const Residue half = F.inv(2);
  for (Residue x = 0; x < p; ++x) {
    // (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2
    Residue lin = F.add(F.mul(c.a1, x), c.a3);
    Residue cubic = F.add(F.mul(F.add(F.mul(F.add(x, c.a2), x), c.a4), x), c.a6);
    Residue g = F.add(F.mul(4, cubic), F.mul(lin, lin));
    Residue r = root[g];
    if (r == p) continue;
    Residue y1 = F.mul(F.sub(r, lin), half);
    Residue y2 = F.mul(F.sub(F.neg(r), lin), half);
    if (y1 == y2) {
      points.push_back(CurvePoint::affine(x, y1));
    } else {
      points.push_back(CurvePoint::affine(x, std::min(y1, y2)));
      points.push_back(CurvePoint::affine(x, std::max(y1, y2)));
    }
  }
  points.push_back(CurvePoint::at_infinity());
  return points;
}

}  // namespace jrl::curves
