#pragma once

// The exclusion set S. Membership is decided from a list of nonzero integer
// witnesses: p is bad iff p < p_min or p divides some witness.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jrl/arith/factor.hpp"
#include "jrl/arith/linalg.hpp"
#include "jrl/arith/prime.hpp"
#include "jrl/fibration/model.hpp"

namespace jrl::fibration {

using arith::Integer;

/// Declared in priority order: a prime with several reasons reports the first.
enum class BadReason { BelowMinimum, BaseBadReduction, DenominatorVanishing, DiscriminantDegeneration };

inline const char* to_string(BadReason r) {
  switch (r) {
    case BadReason::BelowMinimum: return "below-minimum";
    case BadReason::BaseBadReduction: return "base-bad-reduction";
    case BadReason::DiscriminantDegeneration: return "discriminant-degeneration";
    case BadReason::DenominatorVanishing: return "denominator-vanishing";
  }
  return "unknown";
}

class BadPrimeSet {
 public:
  explicit BadPrimeSet(std::uint64_t p_min = 5) : p_min_(p_min) {}

  std::uint64_t p_min() const { return p_min_; }
  BadPrimeSet with_minimum(std::uint64_t p_min) const {
    BadPrimeSet s = *this;
    s.p_min_ = p_min;
    return s;
  }

  /// Ignores zero and unit witnesses.
  void add_witness(Integer n, BadReason reason) {
    n = abs(n);
    if (n <= 1) return;
    witnesses_.emplace_back(std::move(n), reason);
  }
  void add_rational(const arith::Rational& q, BadReason reason) {
    add_witness(q.get_num(), reason);
    add_witness(q.get_den(), reason);
  }

  std::optional<BadReason> reason(std::uint64_t p) const {
    if (p < p_min_) return BadReason::BelowMinimum;
    std::optional<BadReason> best;
    for (const auto& [n, r] : witnesses_) {
      if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
      if (!best || static_cast<int>(r) < static_cast<int>(*best)) best = r;
    }
    return best;
  }
  bool contains(std::uint64_t p) const { return reason(p).has_value(); }

  /// Every prime in the set with its reason, ascending. Witness cofactors
  /// that resist trial division up to 10^6 are returned in `unfactored`.
  std::map<std::uint64_t, BadReason> listed(std::vector<Integer>* unfactored = nullptr) const {
    std::map<std::uint64_t, BadReason> out;
    if (p_min_ > 2)
      for (auto p : arith::primes_in_range(2, p_min_ - 1)) out[p] = BadReason::BelowMinimum;
    static const std::vector<std::uint64_t> small = arith::primes_in_range(2, 1000000);
    for (const auto& [w, r] : witnesses_) {
      Integer n = w;
      for (auto p : small) {
        if (n == 1) break;
        if (Integer(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) n /= p;
        out.emplace(p, *reason(p));
      }
      if (n == 1) continue;
      if (n.fits_ulong_p() && arith::is_prime(n.get_ui())) {
        out.emplace(n.get_ui(), *reason(n.get_ui()));
      } else if (unfactored != nullptr) {
        unfactored->push_back(n);
      }
    }
    return out;
  }

  const std::vector<std::pair<Integer, BadReason>>& witnesses() const { return witnesses_; }

 private:
  std::uint64_t p_min_;
  std::vector<std::pair<Integer, BadReason>> witnesses_;
};

namespace detail {

inline void add_polynomial_witnesses(BadPrimeSet& set, const RationalPolynomial& f, BadReason reason) {
  for (const auto& c : f.coefficients()) set.add_witness(c.get_den(), reason);
}

/// Primes where the zero set of the given polynomials changes shape mod p:
/// contents, leading coefficients, discriminants and pairwise resultants of
/// a coprime base of their factors.
inline void add_locus_witnesses(BadPrimeSet& set, const std::vector<RationalPolynomial>& polys) {
  std::vector<RationalPolynomial> nonconstant;
  for (const auto& f : polys) {
    if (f.is_zero()) continue;
    set.add_rational(arith::rational_content(f), BadReason::DiscriminantDegeneration);
    if (f.degree() > 0) nonconstant.push_back(f);
  }
  auto base = arith::coprime_base(nonconstant);
  std::vector<RationalPolynomial> prim;
  for (const auto& g : base) {
    auto coeffs = arith::primitive_integer_coefficients(g.poly);
    std::vector<arith::Rational> q(coeffs.begin(), coeffs.end());
    prim.emplace_back(q);
  }
  for (std::size_t i = 0; i < prim.size(); ++i) {
    set.add_rational(prim[i].leading(), BadReason::DiscriminantDegeneration);
    set.add_rational(arith::discriminant(prim[i]), BadReason::DiscriminantDegeneration);
    for (std::size_t j = i + 1; j < prim.size(); ++j)
      set.add_rational(arith::resultant(prim[i], prim[j]), BadReason::DiscriminantDegeneration);
  }
}

inline void add_curve_witnesses(BadPrimeSet& set, const WeierstrassCoefficients<Rational>& a, BadReason reason) {
  for (const auto& c : a.as_array()) set.add_witness(c.get_den(), reason);
  set.add_rational(a.discriminant(), reason);
}

/// Norm of A + yB down to Q[x]: A^2 - (a1 x + a3) A B - F B^2.
inline RationalPolynomial norm_to_x(const BaseFunction& f, const EllipticRelation& rel) {
  const RationalPolynomial A = f.a().numerator(), B = f.b().numerator();
  return A * A - rel.linear * A * B - rel.cubic * B * B;
}

}  // namespace detail

/// Builds the exclusion set; see BadReason for the categories.
inline BadPrimeSet compute_bad_primes(const SurfaceSpec& spec, const IntegralModel& model, std::uint64_t p_min) {
  if (p_min < 5) throw std::invalid_argument("compute_bad_primes: p_min must be >= 5");
  BadPrimeSet set(p_min);
  for (std::size_t j = 0; j < model.a.size(); ++j) {
    detail::add_polynomial_witnesses(set, model.a[j], BadReason::DenominatorVanishing);
    detail::add_polynomial_witnesses(set, model.b[j], BadReason::DenominatorVanishing);
    set.add_rational(model.at_infinity[j], BadReason::DiscriminantDegeneration);
  }
  if (spec.constant_part) detail::add_curve_witnesses(set, *spec.constant_part, BadReason::DiscriminantDegeneration);

  // Rebuild the integral model as a surface to read off its discriminant and c4.
  SurfaceSpec integral = spec;
  integral.coefficients.clear();
  std::shared_ptr<const EllipticRelation> rel;
  if (spec.over_elliptic_base()) {
    const auto& E = std::get<curves::EllipticBase>(spec.base);
    detail::add_curve_witnesses(set, E.a, BadReason::BaseBadReduction);
    rel = EllipticRelation::from(E.a);
  }
  for (std::size_t j = 0; j < model.a.size(); ++j) {
    if (rel) {
      integral.coefficients.emplace_back(RationalFunction(model.a[j]), RationalFunction(model.b[j]), rel);
    } else {
      integral.coefficients.emplace_back(RationalFunction(model.a[j]));
    }
  }
  std::vector<RationalPolynomial> locus;
  auto push = [&](const BaseFunction& f) {
    if (f.is_zero()) return;
    locus.push_back(rel ? detail::norm_to_x(f, *rel) : f.a().numerator());
  };
  push(integral.discriminant());
  if (spec.kind == FiberKind::Weierstrass) {
    push(integral.weierstrass().c4());
  } else {
    const int d = spec.hyperelliptic_degree();
    push(integral.coefficients[static_cast<std::size_t>(d)]);  // leading coefficient of f
  }
  if (rel) {
    // Zeros of the discriminant that meet 2-torsion of the base share an x-coordinate.
    RationalPolynomial two_torsion = rel->cubic.scaled(4) + rel->linear * rel->linear;
    locus.push_back(two_torsion);
  }
  detail::add_locus_witnesses(set, locus);

  // The fiber at infinity: its discriminant when smooth in characteristic zero.
  if (spec.kind == FiberKind::Weierstrass) {
    auto inf = WeierstrassCoefficients<Rational>{model.at_infinity[0], model.at_infinity[1], model.at_infinity[2],
                                                 model.at_infinity[3], model.at_infinity[4]};
    set.add_rational(inf.discriminant(), BadReason::DiscriminantDegeneration);
  } else {
    RationalPolynomial f(model.at_infinity);
    if (f.degree() >= 2) set.add_rational(arith::discriminant(f), BadReason::DiscriminantDegeneration);
  }
  return set;
}

}  // namespace jrl::fibration
