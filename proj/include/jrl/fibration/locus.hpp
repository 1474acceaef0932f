#pragma once

#include <vector>

#include "jrl/arith/factor.hpp"
#include "jrl/fibration/bad_primes.hpp"
#include "jrl/fibration/model.hpp"

namespace jrl::fibration {

struct DiscriminantLocus {
  BaseFunction discriminant;
  /// Factors of the numerator and denominator in t, or of the norm to Q[x]
  /// over an elliptic base (x-coordinates of the zeros).
  std::vector<arith::PolynomialFactor> zeros;
  std::vector<arith::PolynomialFactor> poles;
  bool infinity_singular = false;
};

inline DiscriminantLocus discriminant_locus(const SurfaceSpec& spec) {
  spec.validate();
  DiscriminantLocus locus;
  locus.discriminant = spec.discriminant();
  if (spec.over_elliptic_base()) {
    auto rel = EllipticRelation::from(std::get<curves::EllipticBase>(spec.base).a);
    locus.zeros = arith::factor(detail::norm_to_x(locus.discriminant, *rel));
  } else {
    locus.zeros = arith::factor(locus.discriminant.a().numerator());
    locus.poles = arith::factor(locus.discriminant.a().denominator());
  }
  const IntegralModel m = integral_model(spec);
  if (spec.kind == FiberKind::Weierstrass) {
    WeierstrassCoefficients<Rational> inf{m.at_infinity[0], m.at_infinity[1], m.at_infinity[2], m.at_infinity[3],
                                          m.at_infinity[4]};
    locus.infinity_singular = inf.discriminant() == 0;
  } else {
    RationalPolynomial f(m.at_infinity);
    const int g = spec.genus_fiber;
    locus.infinity_singular = f.degree() < 2 * g + 1 || arith::discriminant(f) == 0;
  }
  return locus;
}

}  // namespace jrl::fibration
