#pragma once

// Factorization over Q, limited to what discriminants of low-degree families
// need: squarefree decomposition, rational roots, and the split of a quartic
// into two integral quadratics. Anything of degree >= 5 that survives is kept
// whole and marked as not proven irreducible.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "jrl/arith/polynomial.hpp"

namespace jrl::arith {

struct PolynomialFactor {
  RationalPolynomial poly;  // monic
  int multiplicity = 1;
  bool proven_irreducible = true;
};

/// Yun's algorithm. Factors are monic, squarefree and pairwise coprime.
inline std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(const RationalPolynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<std::pair<RationalPolynomial, int>> out;
  RationalPolynomial a = gcd(f, f.derivative());
  RationalPolynomial b = f / a;
  RationalPolynomial c = f.derivative() / a;
  RationalPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RationalPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Positive divisors of |n| by trial division (n != 0).
inline std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, int>> primes;
  for (Integer q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e > 0) primes.emplace_back(q, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (const auto& [q, e] : primes) {
    std::size_t count = divs.size();
    Integer power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= q;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Distinct rational roots, ascending.
inline std::vector<Rational> rational_roots(const RationalPolynomial& f) {
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  auto prim = primitive_integer_coefficients(f);
  std::size_t low = 0;
  while (prim[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (prim.size() - low <= 1) return roots;
  const Integer a0 = prim[low];
  const Integer an = prim.back();
  RationalPolynomial shifted(std::vector<Rational>(prim.begin() + static_cast<long>(low), prim.end()));
  for (const Integer& num : positive_divisors(a0)) {
    for (const Integer& den : positive_divisors(an)) {
      if (gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        Rational r(num * sign, den);
        r.canonicalize();
        if (shifted.evaluate(r) == 0) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace detail {

inline std::optional<Integer> exact_quotient(const Integer& a, const Integer& b) {
  if (b == 0 || a % b != 0) return std::nullopt;
  return Integer(a / b);
}

inline std::optional<Integer> integer_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace detail

/// Writes a primitive integral quartic without rational roots as a product of
/// two integral quadratics, if possible.
inline std::optional<std::pair<RationalPolynomial, RationalPolynomial>> split_quartic(const RationalPolynomial& f) {
  if (f.degree() != 4) return std::nullopt;
  auto P = primitive_integer_coefficients(f);
  const Integer L = P[4], E = P[0];
  if (E == 0) return std::nullopt;
  auto quad = [](const Integer& l, const Integer& a, const Integer& b) {
    return RationalPolynomial(std::vector<Rational>{Rational(b), Rational(a), Rational(l)});
  };
  auto verify = [&](const Integer& l1, const Integer& a, const Integer& b, const Integer& l2, const Integer& c,
                    const Integer& d) {
    return l1 * c + a * l2 == P[3] && l1 * d + a * c + b * l2 == P[2] && a * d + b * c == P[1];
  };
  for (const Integer& l1 : positive_divisors(L)) {
    const Integer l2 = L / l1;
    for (const Integer& bd : positive_divisors(E)) {
      for (int sign : {1, -1}) {
        const Integer b = bd * sign;
        const Integer d = E / b;
        const Integer det = l2 * b - l1 * d;
        if (det != 0) {
          auto a = detail::exact_quotient(P[3] * b - l1 * P[1], det);
          auto c = detail::exact_quotient(l2 * P[1] - d * P[3], det);
          if (a && c && verify(l1, *a, b, l2, *c, d)) return std::make_pair(quad(l1, *a, b), quad(l2, *c, d));
          continue;
        }
        // Degenerate system: eliminate c and solve l2 a^2 - P3 a + l1 K = 0.
        const Integer K = P[2] - l1 * d - b * l2;
        const Integer disc = P[3] * P[3] - 4 * l2 * l1 * K;
        auto root = detail::integer_sqrt(disc);
        if (!root) continue;
        for (const Integer& numer : {Integer(P[3] + *root), Integer(P[3] - *root)}) {
          auto a = detail::exact_quotient(numer, Integer(2 * l2));
          if (!a) continue;
          auto c = detail::exact_quotient(P[3] - l2 * *a, l1);
          if (c && verify(l1, *a, b, l2, *c, d)) return std::make_pair(quad(l1, *a, b), quad(l2, *c, d));
        }
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline bool factor_less(const PolynomialFactor& x, const PolynomialFactor& y) {
  if (x.poly.degree() != y.poly.degree()) return x.poly.degree() < y.poly.degree();
  for (int i = x.poly.degree(); i >= 0; --i) {
    Rational a = x.poly.coeff(static_cast<std::size_t>(i)), b = y.poly.coeff(static_cast<std::size_t>(i));
    if (a != b) return a < b;
  }
  return x.multiplicity < y.multiplicity;
}

/// Splits a squarefree monic polynomial into irreducible pieces where possible.
inline std::vector<PolynomialFactor> split_squarefree(RationalPolynomial g, int multiplicity) {
  std::vector<PolynomialFactor> out;
  for (const Rational& r : rational_roots(g)) {
    RationalPolynomial lin(std::vector<Rational>{Rational(-r), Rational(1)});
    out.push_back({lin, multiplicity, true});
    g = g / lin;
  }
  g = g.monic();
  if (g.degree() >= 1 && g.degree() <= 3) {
    out.push_back({g, multiplicity, true});
  } else if (g.degree() == 4) {
    if (auto split = split_quartic(g)) {
      out.push_back({split->first.monic(), multiplicity, true});
      out.push_back({split->second.monic(), multiplicity, true});
    } else {
      out.push_back({g, multiplicity, true});
    }
  } else if (g.degree() >= 5) {
    out.push_back({g, multiplicity, false});
  }
  return out;
}

}  // namespace detail

/// Monic factors with multiplicities, in a deterministic order.
inline std::vector<PolynomialFactor> factor(const RationalPolynomial& f) {
  std::vector<PolynomialFactor> out;
  for (const auto& [g, m] : squarefree_decomposition(f)) {
    auto pieces = detail::split_squarefree(g, m);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  std::sort(out.begin(), out.end(), detail::factor_less);
  return out;
}

/// Pairwise coprime monic factors whose products generate every input up to
/// units. Multiplicities are not meaningful in the result (set to 1).
inline std::vector<PolynomialFactor> coprime_base(const std::vector<RationalPolynomial>& polys) {
  std::vector<PolynomialFactor> base;
  auto add = [&base](PolynomialFactor f) {
    f.multiplicity = 1;
    for (const auto& b : base)
      if (b.poly == f.poly) return;
    base.push_back(std::move(f));
  };
  for (const auto& p : polys) {
    if (p.degree() < 1) continue;
    for (auto f : factor(p)) add(std::move(f));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        RationalPolynomial g = gcd(base[i].poly, base[j].poly);
        if (g.degree() < 1) continue;
        std::vector<RationalPolynomial> parts{g, base[i].poly / g, base[j].poly / g};
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        for (const auto& part : parts) {
          if (part.degree() < 1) continue;
          for (auto f : factor(part)) add(std::move(f));
        }
        changed = true;
      }
    }
  }
  std::sort(base.begin(), base.end(), detail::factor_less);
  return base;
}

}  // namespace jrl::arith
