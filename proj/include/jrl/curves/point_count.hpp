#pragma once

// Point counts and Frobenius traces of plane Weierstrass cubics and
// hyperelliptic curves over a prime field.
//
// Convention for every fiber, smooth or not: a = p + 1 - #(given projective
// model). On a Weierstrass cubic the point at infinity counts once; a
// singular point counts once.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "jrl/arith/prime_field.hpp"
#include "jrl/curves/fp_polynomial.hpp"

namespace jrl::curves {

using arith::PrimeField;
using Residue = PrimeField::Element;

struct EllipticFiberModP {
  std::uint64_t p = 0;
  Residue a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

/// y^2 = f(x), f given by ascending coefficients with exactly 2g+3 slots
/// (the x^(2g+2) slot may be zero).
struct HyperellipticFiberModP {
  std::uint64_t p = 0;
  std::vector<Residue> f;
  int genus = 2;
};

using FiberModP = std::variant<EllipticFiberModP, HyperellipticFiberModP>;

namespace detail {

struct ShortCubic {  // 4x^3 + b2 x^2 + 2 b4 x + b6
  Residue b2, b4x2, b6;
};

inline ShortCubic completed_square(const PrimeField& F, const EllipticFiberModP& e) {
  Residue b2 = F.add(F.mul(e.a1, e.a1), F.mul(4 % F.modulus(), e.a2));
  Residue b4 = F.add(F.mul(2, e.a4), F.mul(e.a1, e.a3));
  Residue b6 = F.add(F.mul(e.a3, e.a3), F.mul(4 % F.modulus(), e.a6));
  return {b2, F.add(b4, b4), b6};
}

}  // namespace detail

inline Residue discriminant_mod_p(const EllipticFiberModP& e) {
  PrimeField F(e.p);
  Residue b2 = F.add(F.mul(e.a1, e.a1), F.mul(F.from_int(4), e.a2));
  Residue b4 = F.add(F.mul(F.from_int(2), e.a4), F.mul(e.a1, e.a3));
  Residue b6 = F.add(F.mul(e.a3, e.a3), F.mul(F.from_int(4), e.a6));
  Residue b8 = F.sub(F.add(F.add(F.mul(F.mul(e.a1, e.a1), e.a6), F.mul(F.from_int(4), F.mul(e.a2, e.a6))),
                           F.mul(e.a2, F.mul(e.a3, e.a3))),
                     F.add(F.mul(e.a1, F.mul(e.a3, e.a4)), F.mul(e.a4, e.a4)));
  Residue d = F.neg(F.mul(F.mul(b2, b2), b8));
  d = F.sub(d, F.mul(F.from_int(8), F.mul(b4, F.mul(b4, b4))));
  d = F.sub(d, F.mul(F.from_int(27), F.mul(b6, b6)));
  d = F.add(d, F.mul(F.from_int(9), F.mul(b2, F.mul(b4, b6))));
  return d;
}

inline bool is_singular(const EllipticFiberModP& e) { return discriminant_mod_p(e) == 0; }

/// Exhaustive double loop over (x, y); valid for every prime, including 2 and 3.
inline std::int64_t count_points_elliptic_naive(const EllipticFiberModP& e) {
  PrimeField F(e.p);
  std::int64_t count = 1;  // point at infinity
  for (Residue x = 0; x < e.p; ++x) {
    Residue rhs = F.add(F.mul(F.add(F.mul(F.add(x, e.a2), x), e.a4), x), e.a6);
    for (Residue y = 0; y < e.p; ++y) {
      Residue lhs = F.mul(y, F.add(F.add(y, F.mul(e.a1, x)), e.a3));
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

/// Per-prime engine holding the quadratic-character table. One per worker.
class TraceEngine {
 public:
  explicit TraceEngine(std::uint64_t p) : F_(p), chi_(F_.character_table()) {
    if (p < 5) throw std::invalid_argument("TraceEngine: p must be >= 5, got " + std::to_string(p));
  }

  const PrimeField& field() const { return F_; }
  std::uint64_t p() const { return F_.modulus(); }
  int chi(Residue a) const { return chi_[a]; }

  /// Sum over x of chi(4x^3 + b2 x^2 + 2 b4 x + b6), by third-order finite differences.
  std::int64_t character_sum(const EllipticFiberModP& e) const {
    check(e.p);
    const auto c = detail::completed_square(F_, e);
    const std::uint64_t p = F_.modulus();
    // g(0), first, second and third forward differences of g at x = 0.
    std::uint64_t v = c.b6;
    std::uint64_t d1 = (4 + c.b2 + c.b4x2) % p;
    std::uint64_t d2 = (24 + 2 * c.b2) % p;
    const std::uint64_t d3 = 24 % p;
    std::int64_t sum = 0;
    const std::int8_t* chi = chi_.data();
    for (std::uint64_t x = 0; x < p; ++x) {
      sum += chi[v];
      v += d1;
      if (v >= p) v -= p;
      d1 += d2;
      if (d1 >= p) d1 -= p;
      d2 += d3;
      if (d2 >= p) d2 -= p;
    }
    return sum;
  }

  std::int64_t count_points(const EllipticFiberModP& e) const {
    return static_cast<std::int64_t>(p()) + 1 + character_sum(e);
  }

  std::int64_t trace(const EllipticFiberModP& e) const { return -character_sum(e); }

  std::int64_t count_points(const HyperellipticFiberModP& h) const {
    check(h.p);
    validate(h);
    std::int64_t affine = 0;
    for (Residue x = 0; x < p(); ++x) {
      Residue acc = 0;
      for (auto it = h.f.rbegin(); it != h.f.rend(); ++it) acc = F_.add(F_.mul(acc, x), *it);
      affine += 1 + chi_[acc];
    }
    const Residue top = h.f.back();
    return affine + (top == 0 ? 1 : 1 + chi_[top]);
  }

  std::int64_t trace(const HyperellipticFiberModP& h) const {
    return static_cast<std::int64_t>(p()) + 1 - count_points(h);
  }

  std::int64_t trace(const FiberModP& fiber) const {
    return std::visit([this](const auto& f) { return trace(f); }, fiber);
  }

 private:
  void check(std::uint64_t p) const {
    if (p != F_.modulus()) throw std::invalid_argument("fiber prime does not match the engine prime");
  }
  static void validate(const HyperellipticFiberModP& h) {
    if (h.genus < 1 || h.f.size() != static_cast<std::size_t>(2 * h.genus + 3)) {
      throw std::invalid_argument("hyperelliptic fiber needs exactly 2g+3 coefficient slots");
    }
  }

  PrimeField F_;
  std::vector<std::int8_t> chi_;
};

/// Number of projective points; requires p >= 5 (see count_points_elliptic_naive).
inline std::int64_t count_points_elliptic(const EllipticFiberModP& e) {
  if (e.p < 5) throw std::invalid_argument("count_points_elliptic: p must be >= 5");
  return TraceEngine(e.p).count_points(e);
}

inline std::int64_t fiber_trace(const FiberModP& fiber) {
  std::uint64_t p = std::visit([](const auto& f) { return f.p; }, fiber);
  return TraceEngine(p).trace(fiber);
}

/// Singular when f has a repeated root or deg f < 2g+1 (singular at infinity).
inline bool is_singular(const HyperellipticFiberModP& h) {
  PrimeField F(h.p);
  FpPolynomial f(F, h.f);
  if (f.degree() < 2 * h.genus + 1) return true;
  return gcd(f, f.derivative()).degree() > 0;
}

/// |a| <= 2 g sqrt(p), exactly.
inline bool within_weil_bound(std::int64_t a, std::uint64_t p, int genus) {
  auto lhs = static_cast<unsigned __int128>(std::llabs(a)) * static_cast<unsigned __int128>(std::llabs(a));
  auto rhs = static_cast<unsigned __int128>(4) * genus * genus * p;
  return lhs <= rhs;
}

/// |a| <= 2 g sqrt(p) + slack, exactly.
inline bool within_weil_bound(std::int64_t a, std::uint64_t p, int genus, int slack) {
  std::int64_t excess = std::llabs(a) - slack;
  return excess <= 0 || within_weil_bound(excess, p, genus);
}

}  // namespace jrl::curves
