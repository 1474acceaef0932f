#pragma once

// Chord-tangent group law on a general Weierstrass curve over F_p.

#include <cstdint>
#include <stdexcept>

#include "jrl/arith/prime_field.hpp"
#include "jrl/curves/point_count.hpp"

namespace jrl::curves {

struct CurvePoint {
  bool infinity = true;
  Residue x = 0, y = 0;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(Residue x, Residue y) { return {false, x, y}; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity != b.infinity) return !a.infinity;  // affine points first
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

class EllipticCurveModP {
 public:
  explicit EllipticCurveModP(const EllipticFiberModP& c) : F_(c.p), c_(c) {}

  const PrimeField& field() const { return F_; }
  const EllipticFiberModP& coefficients() const { return c_; }

  bool contains(const CurvePoint& P) const {
    if (P.infinity) return true;
    if (P.x >= F_.modulus() || P.y >= F_.modulus()) return false;
    Residue lhs = F_.mul(P.y, F_.add(F_.add(P.y, F_.mul(c_.a1, P.x)), c_.a3));
    Residue rhs = F_.add(F_.mul(F_.add(F_.mul(F_.add(P.x, c_.a2), P.x), c_.a4), P.x), c_.a6);
    return lhs == rhs;
  }

  CurvePoint negate(const CurvePoint& P) const {
    require(P);
    if (P.infinity) return P;
    return CurvePoint::affine(P.x, F_.sub(F_.neg(P.y), F_.add(F_.mul(c_.a1, P.x), c_.a3)));
  }

  CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const {
    require(P);
    require(Q);
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Residue lambda, nu;
    if (P.x == Q.x) {
      // Vertical line through P and Q, or the tangent at a 2-torsion point.
      Residue denom = F_.add(F_.add(F_.add(P.y, Q.y), F_.mul(c_.a1, Q.x)), c_.a3);
      if (denom == 0) return CurvePoint::at_infinity();
      Residue x2 = F_.mul(P.x, P.x);
      Residue num = F_.sub(F_.add(F_.add(F_.mul(3, x2), F_.mul(F_.mul(2, c_.a2), P.x)), c_.a4), F_.mul(c_.a1, P.y));
      Residue num_nu = F_.sub(F_.add(F_.add(F_.neg(F_.mul(x2, P.x)), F_.mul(c_.a4, P.x)), F_.mul(2, c_.a6)),
                              F_.mul(c_.a3, P.y));
      Residue inv = F_.inv(denom);
      lambda = F_.mul(num, inv);
      nu = F_.mul(num_nu, inv);
    } else {
      Residue inv = F_.inv(F_.sub(Q.x, P.x));
      lambda = F_.mul(F_.sub(Q.y, P.y), inv);
      nu = F_.mul(F_.sub(F_.mul(P.y, Q.x), F_.mul(Q.y, P.x)), inv);
    }
    Residue x3 = F_.sub(F_.sub(F_.sub(F_.add(F_.mul(lambda, lambda), F_.mul(c_.a1, lambda)), c_.a2), P.x), Q.x);
    Residue y3 = F_.sub(F_.sub(F_.neg(F_.mul(F_.add(lambda, c_.a1), x3)), nu), c_.a3);
    return CurvePoint::affine(x3, y3);
  }

  /// [n]P by double-and-add, n >= 1.
  CurvePoint multiply(const CurvePoint& P, std::int64_t n) const {
    if (n <= 0) throw std::invalid_argument("multiply_by_n: n must be >= 1");
    require(P);
    CurvePoint result = CurvePoint::at_infinity();
    CurvePoint base = P;
    auto k = static_cast<std::uint64_t>(n);
    while (k > 0) {
      if (k & 1U) result = add(result, base);
      k >>= 1U;
      if (k > 0) base = add(base, base);
    }
    return result;
  }

 private:
  void require(const CurvePoint& P) const {
    if (!contains(P)) throw std::invalid_argument("point is not on the curve");
  }

  PrimeField F_;
  EllipticFiberModP c_;
};

}  // namespace jrl::curves
