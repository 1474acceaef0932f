#pragma once

// Local conductor data of elliptic fibrations over the projective line,
// from the valuations of c4, c6 and the discriminant at each place. Residue
// fields have characteristic zero, so the classification is read off a table
// and the wild part is always zero.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jrl/arith/factor.hpp"
#include "jrl/fibration/surface.hpp"

namespace jrl::conductor {

using arith::kInfiniteValuation;
using arith::RationalFunction;
using arith::RationalPolynomial;

enum class KodairaType { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar };

struct KodairaSymbol {
  KodairaType type = KodairaType::I0;
  int m = 0;  // for I_m and I_m*

  std::string to_string() const {
    switch (type) {
      case KodairaType::I0: return "I0";
      case KodairaType::In: return "I" + std::to_string(m);
      case KodairaType::II: return "II";
      case KodairaType::III: return "III";
      case KodairaType::IV: return "IV";
      case KodairaType::I0Star: return "I0*";
      case KodairaType::InStar: return "I" + std::to_string(m) + "*";
      case KodairaType::IVStar: return "IV*";
      case KodairaType::IIIStar: return "III*";
      case KodairaType::IIStar: return "II*";
    }
    return "?";
  }
  friend bool operator==(const KodairaSymbol&, const KodairaSymbol&) = default;
};

struct Place {
  enum class Kind { Finite, Infinity };
  Kind kind = Kind::Infinity;
  RationalPolynomial poly;  // monic, finite places only
  bool proven_irreducible = true;
  std::string name;  // places on an elliptic base: label and degree as supplied
  int named_degree = 0;

  static Place infinity() { return {}; }
  static Place finite(RationalPolynomial g, bool proven = true) {
    if (g.degree() < 1) throw std::invalid_argument("a finite place needs a nonconstant polynomial");
    return {Kind::Finite, g.monic(), proven, {}, 0};
  }
  static Place named(std::string name, int degree) {
    return {Kind::Finite, RationalPolynomial(), true, std::move(name), degree};
  }

  int degree() const {
    if (!name.empty()) return named_degree;
    return kind == Kind::Infinity ? 1 : poly.degree();
  }
  std::string label() const {
    if (!name.empty()) return name;
    return kind == Kind::Infinity ? "inf" : arith::to_string(poly, "t");
  }
};

struct LocalConductorDatum {
  Place place;
  std::optional<KodairaSymbol> kodaira;
  std::optional<int> v_delta_min;
  int epsilon = 0;
  int delta = 0;  // Swan part, zero in residue characteristic zero
  std::optional<int> toric_rank;
  std::optional<int> unipotent_rank;
  std::string kodaira_label;  // free text for supplied data
};

struct Valuations {
  int c4 = 0, c6 = 0, delta = 0;
};

/// Integral minimal valuations: rescale by u^(4, 6, 12) until c4, c6 are
/// integral and the model cannot be shrunk further.
inline Valuations minimal_valuations(Valuations v) {
  if (v.delta >= kInfiniteValuation) throw std::domain_error("singular generic fiber");
  while (v.c4 < 0 || v.c6 < 0) {
    v.c4 = v.c4 >= kInfiniteValuation ? v.c4 : v.c4 + 4;
    v.c6 = v.c6 >= kInfiniteValuation ? v.c6 : v.c6 + 6;
    v.delta += 12;
  }
  while (v.c4 >= 4 && v.c6 >= 6 && v.delta >= 12) {
    v.c4 = v.c4 >= kInfiniteValuation ? v.c4 : v.c4 - 4;
    v.c6 = v.c6 >= kInfiniteValuation ? v.c6 : v.c6 - 6;
    v.delta -= 12;
  }
  return v;
}

/// Kodaira symbol of a minimal model with the given valuations.
inline KodairaSymbol kodaira_from_minimal(const Valuations& v) {
  auto fail = [&v]() {
    throw std::domain_error("valuations (" + std::to_string(v.c4) + ", " + std::to_string(v.c6) + ", " +
                            std::to_string(v.delta) + ") match no Kodaira type");
  };
  // 1728 Delta = c4^3 - c6^2
  const long v3 = 3L * v.c4, v2 = 2L * v.c6;
  if (v.delta < std::min(v3, v2) || (v3 != v2 && v.delta != std::min(v3, v2))) fail();
  if (v.delta == 0) return {KodairaType::I0, 0};
  if (v.c4 == 0) return {KodairaType::In, v.delta};
  if (v3 < v.delta) {
    if (v.c4 != 2 || v.c6 != 3) fail();
    return {KodairaType::InStar, v.delta - 6};
  }
  switch (v.delta) {
    case 2: return {KodairaType::II, 0};
    case 3: return {KodairaType::III, 0};
    case 4: return {KodairaType::IV, 0};
    case 6: return {KodairaType::I0Star, 0};
    case 8: return {KodairaType::IVStar, 0};
    case 9: return {KodairaType::IIIStar, 0};
    case 10: return {KodairaType::IIStar, 0};
    default: break;
  }
  fail();
  return {};
}

inline LocalConductorDatum classify_valuations(const Place& place, const Valuations& raw) {
  const Valuations v = minimal_valuations(raw);
  LocalConductorDatum d;
  d.place = place;
  d.kodaira = kodaira_from_minimal(v);
  d.kodaira_label = d.kodaira->to_string();
  d.v_delta_min = v.delta;
  if (d.kodaira->type == KodairaType::I0) {
    d.toric_rank = 0;
    d.unipotent_rank = 0;
  } else if (d.kodaira->type == KodairaType::In) {
    d.toric_rank = 1;
    d.unipotent_rank = 0;
  } else {
    d.toric_rank = 0;
    d.unipotent_rank = 1;
  }
  d.epsilon = *d.toric_rank + 2 * *d.unipotent_rank;
  return d;
}

inline int valuation_at(const RationalFunction& f, const Place& place) {
  return place.kind == Place::Kind::Infinity ? f.valuation_at_infinity() : f.valuation(place.poly);
}

namespace detail {

inline curves::WeierstrassCoefficients<RationalFunction> p1_model(const fibration::SurfaceSpec& spec) {
  if (spec.kind != fibration::FiberKind::Weierstrass) {
    throw std::invalid_argument("Kodaira classification needs an elliptic fiber; supply local data instead");
  }
  if (spec.over_elliptic_base()) {
    throw std::invalid_argument("Kodaira classification is implemented over the projective line only");
  }
  const auto& c = spec.coefficients;
  return {c[0].a(), c[1].a(), c[2].a(), c[3].a(), c[4].a()};
}

}  // namespace detail

inline LocalConductorDatum kodaira_classify(const fibration::SurfaceSpec& spec, const Place& place) {
  const auto a = detail::p1_model(spec);
  Valuations v{valuation_at(a.c4(), place), valuation_at(a.c6(), place), valuation_at(a.discriminant(), place)};
  return classify_valuations(place, v);
}

struct ConductorReport {
  std::vector<LocalConductorDatum> data;
  long f = 0;
  long s = 0;
  long total_v_delta = 0;  // sum of v(Delta_min) * deg over the reported places
  bool supplied = false;
};

inline ConductorReport summarize(std::vector<LocalConductorDatum> data, bool supplied) {
  ConductorReport r;
  r.supplied = supplied;
  for (const auto& d : data) {
    if (d.epsilon < 0 || d.delta != 0) throw std::logic_error("invalid local conductor datum");
    r.f += static_cast<long>(d.epsilon + d.delta) * d.place.degree();
    if (d.epsilon > 0) ++r.s;
    if (d.v_delta_min) r.total_v_delta += static_cast<long>(*d.v_delta_min) * d.place.degree();
  }
  r.data = std::move(data);
  return r;
}

/// Candidate finite places: the coprime base of the numerators and denominators of c4, c6 and Delta.
inline std::vector<Place> candidate_places(const fibration::SurfaceSpec& spec) {
  const auto a = detail::p1_model(spec);
  std::vector<RationalPolynomial> polys;
  for (const RationalFunction& f : {a.c4(), a.c6(), a.discriminant()}) {
    if (f.is_zero()) continue;
    polys.push_back(f.numerator());
    polys.push_back(f.denominator());
  }
  std::vector<Place> places;
  for (const auto& g : arith::coprime_base(polys)) places.push_back(Place::finite(g.poly, g.proven_irreducible));
  places.push_back(Place::infinity());
  return places;
}

/// Places parsed from supplied data: "inf" or a polynomial in t.
inline Place parse_place(const std::string& label, int degree) {
  if (label == "inf" || label == "infinity") return Place::infinity();
  auto f = fibration::parse_base_function(label, nullptr);
  if (!f.a().is_polynomial() || f.a().numerator().degree() < 1) {
    throw std::invalid_argument("place '" + label + "' is not a nonconstant polynomial in t");
  }
  Place p = Place::finite(f.a().numerator(), true);
  if (p.degree() != degree) {
    throw std::invalid_argument("place '" + label + "' has degree " + std::to_string(p.degree()) + ", not " +
                                std::to_string(degree));
  }
  return p;
}

/// Computed for elliptic fibers over the projective line, otherwise taken
/// from the caller-supplied data (0 <= epsilon <= 2 g_X).
inline ConductorReport conductor_degree(const fibration::SurfaceSpec& spec) {
  const bool computable = spec.kind == fibration::FiberKind::Weierstrass && !spec.over_elliptic_base();
  if (computable) {
    std::vector<LocalConductorDatum> data;
    for (const auto& place : candidate_places(spec)) {
      auto d = kodaira_classify(spec, place);
      if (d.epsilon > 0) data.push_back(std::move(d));
    }
    return summarize(std::move(data), false);
  }
  if (spec.supplied_conductor.empty()) {
    throw std::invalid_argument("surface '" + spec.name + "' needs supplied [[conductor.place]] data");
  }
  std::vector<LocalConductorDatum> data;
  for (const auto& s : spec.supplied_conductor) {
    if (s.epsilon < 0 || s.epsilon > 2 * spec.genus_fiber) {
      throw std::invalid_argument("supplied epsilon out of range [0, 2g] at " + s.place);
    }
    LocalConductorDatum d;
    if (spec.over_elliptic_base()) {
      d.place = Place::named(s.place, s.degree);
    } else {
      d.place = parse_place(s.place, s.degree);
    }
    d.epsilon = s.epsilon;
    d.v_delta_min = s.v_delta;
    d.toric_rank = s.toric_rank;
    d.unipotent_rank = s.unipotent_rank;
    if (s.kodaira) d.kodaira_label = *s.kodaira;
    if (d.toric_rank && d.unipotent_rank && *d.toric_rank + 2 * *d.unipotent_rank != d.epsilon) {
      throw std::invalid_argument("supplied ranks disagree with epsilon at " + s.place);
    }
    data.push_back(std::move(d));
  }
  return summarize(std::move(data), true);
}

}  // namespace jrl::conductor
