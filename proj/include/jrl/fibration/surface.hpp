#pragma once

// Fibered surfaces X -> C over Q, given by a fiber model whose coefficients
// are functions on the base curve C.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "jrl/arith/linalg.hpp"
#include "jrl/curves/base_curve.hpp"
#include "jrl/curves/weierstrass.hpp"
#include "jrl/fibration/base_function.hpp"

namespace jrl::fibration {

using curves::WeierstrassCoefficients;

enum class FiberKind { Weierstrass, Hyperelliptic };

/// Local conductor data given by the caller, for fibers the library cannot classify.
struct SuppliedLocalDatum {
  std::string place;  // "t - 1", "inf", ...
  int degree = 1;
  int epsilon = 0;
  std::optional<std::string> kodaira;
  std::optional<int> v_delta;
  std::optional<int> toric_rank;
  std::optional<int> unipotent_rank;
};

struct SurfaceSpec {
  std::string name;
  curves::BaseCurve base = curves::ProjectiveLine{};
  FiberKind kind = FiberKind::Weierstrass;
  int genus_fiber = 1;
  /// a1, a2, a3, a4, a6 for Weierstrass fibers; c_0 .. c_{2g+2} of y^2 = sum c_j x^j otherwise.
  std::vector<BaseFunction> coefficients;
  int dim_trace = 0;
  std::optional<WeierstrassCoefficients<Rational>> constant_part;
  std::vector<SuppliedLocalDatum> supplied_conductor;

  bool over_elliptic_base() const { return std::holds_alternative<curves::EllipticBase>(base); }
  int base_genus() const { return curves::genus(base); }

  /// Scaling weights: x -> u^2 x, y -> u^3 y on Weierstrass models, y -> u y on hyperelliptic ones.
  std::vector<int> weights() const {
    if (kind == FiberKind::Weierstrass) return {1, 2, 3, 4, 6};
    return std::vector<int>(coefficients.size(), 2);
  }

  WeierstrassCoefficients<BaseFunction> weierstrass() const {
    if (kind != FiberKind::Weierstrass) throw std::logic_error("surface fiber is not a Weierstrass model");
    return {coefficients[0], coefficients[1], coefficients[2], coefficients[3], coefficients[4]};
  }

  /// Degree in x of the generic fiber polynomial (hyperelliptic only).
  int hyperelliptic_degree() const {
    for (int j = static_cast<int>(coefficients.size()) - 1; j >= 0; --j)
      if (!coefficients[static_cast<std::size_t>(j)].is_zero()) return j;
    return -1;
  }

  /// Fiber discriminant as a function on the base.
  BaseFunction discriminant() const {
    if (kind == FiberKind::Weierstrass) return weierstrass().discriminant();
    std::vector<RationalFunction> f;
    for (const auto& c : coefficients) f.push_back(c.a());
    arith::Polynomial<RationalFunction> poly(f);
    if (poly.degree() < 1) return BaseFunction(0L);
    return BaseFunction(arith::discriminant(poly));
  }

  void validate() const {
    auto fail = [this](const std::string& what) {
      throw std::invalid_argument("surface '" + name + "': " + what);
    };
    if (kind == FiberKind::Weierstrass) {
      if (coefficients.size() != 5) fail("a Weierstrass fiber needs a1, a2, a3, a4, a6");
      if (genus_fiber != 1) fail("a Weierstrass fiber has genus 1");
    } else {
      if (genus_fiber < 2) fail("hyperelliptic fibers need genus >= 2");
      if (coefficients.size() != static_cast<std::size_t>(2 * genus_fiber + 3)) {
        fail("hyperelliptic fibers need exactly 2g+3 coefficients");
      }
      int d = hyperelliptic_degree();
      if (d != 2 * genus_fiber + 1 && d != 2 * genus_fiber + 2) fail("deg f must be 2g+1 or 2g+2");
      if (over_elliptic_base()) fail("hyperelliptic fibers are supported over the projective line only");
    }
    if (over_elliptic_base()) {
      for (const auto& c : coefficients)
        if (!c.is_polynomial()) fail("coefficients over an elliptic base must be polynomial in x and y");
    } else {
      for (const auto& c : coefficients)
        if (!c.b().is_zero()) fail("coefficients over the projective line must be functions of t");
    }
    if (dim_trace < 0) fail("dim_b must be >= 0");
    if (!constant_part && dim_trace != 0) fail("dim_b must be 0 without a constant part");
    if (constant_part) {
      if (dim_trace != 1) fail("dim_b must be 1 with a constant part");
      if (constant_part->discriminant() == 0) fail("constant part is singular");
    }
    for (const auto& d : supplied_conductor) {
      if (d.degree < 1) fail("conductor place degree must be >= 1");
      if (d.epsilon < 0 || d.epsilon > 2 * genus_fiber) fail("conductor epsilon must lie in [0, 2g]");
    }
    if (discriminant().is_zero()) fail("fiber discriminant vanishes identically");
  }
};

}  // namespace jrl::fibration
