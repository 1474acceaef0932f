#pragma once

// Average Frobenius traces of a fibered surface over F_p.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jrl/curves/point_count.hpp"
#include "jrl/fibration/bad_primes.hpp"
#include "jrl/fibration/model.hpp"

namespace jrl::fibration {

using curves::FiberModP;
using curves::Residue;

/// A surface with its integral model and exclusion witnesses, computed once.
struct PreparedSurface {
  SurfaceSpec spec;
  IntegralModel model;
  BadPrimeSet bad;  // p_min = 5
  bool constant_family = false;

  explicit PreparedSurface(SurfaceSpec s) : spec(std::move(s)) {
    spec.validate();
    model = integral_model(spec);
    bad = compute_bad_primes(spec, model, 5);
    constant_family = true;
    for (std::size_t j = 0; j < model.a.size(); ++j)
      if (model.a[j].degree() > 0 || !model.b[j].is_zero()) constant_family = false;
  }
};

inline BadPrimeSet compute_bad_primes(const SurfaceSpec& spec, std::uint64_t p_min) {
  SurfaceSpec s = spec;
  s.validate();
  return compute_bad_primes(s, integral_model(s), p_min);
}

/// The integral model reduced mod p.
class ReducedSurface {
 public:
  ReducedSurface(const PreparedSurface& surface, std::uint64_t p)
      : F_(p), kind_(surface.spec.kind), genus_(surface.spec.genus_fiber) {
    for (std::size_t j = 0; j < surface.model.a.size(); ++j) {
      a_.push_back(reduce(surface.model.a[j]));
      b_.push_back(reduce(surface.model.b[j]));
      inf_.push_back(F_.from_rational(surface.model.at_infinity[j]));
    }
  }

  std::uint64_t p() const { return F_.modulus(); }

  FiberModP fiber_at(const curves::BasePointModP& z) const {
    std::vector<Residue> c(a_.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (z.infinity) {
        c[j] = inf_[j];
      } else {
        c[j] = F_.add(horner(a_[j], z.x), F_.mul(z.y, horner(b_[j], z.x)));
      }
    }
    if (kind_ == FiberKind::Weierstrass) return curves::EllipticFiberModP{p(), c[0], c[1], c[2], c[3], c[4]};
    return curves::HyperellipticFiberModP{p(), c, genus_};
  }

 private:
  std::vector<Residue> reduce(const RationalPolynomial& f) const {
    std::vector<Residue> r;
    for (const auto& c : f.coefficients()) r.push_back(F_.from_rational(c));
    return r;
  }
  Residue horner(const std::vector<Residue>& f, Residue x) const {
    Residue acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = F_.add(F_.mul(acc, x), *it);
    return acc;
  }

  arith::PrimeField F_;
  FiberKind kind_;
  int genus_;
  std::vector<std::vector<Residue>> a_, b_;
  std::vector<Residue> inf_;
};

struct TraceSample {
  std::uint64_t p = 0;
  Rational avg_trace;       // A_p = (1/p) sum over all base points
  Rational avg_trace_good;  // A'_p = mean over good base points
  Rational reduced;         // A*_p = A_p - a_p(B)
  std::int64_t n_base_points = 0;
  std::int64_t n_bad_fibers = 0;
  std::int64_t trace_sum = 0;      // sum over all base points
  std::int64_t bad_trace_sum = 0;  // sum over singular fibers
  std::int64_t trace_part = 0;     // a_p(B)
};

namespace detail {

inline bool fiber_singular(const FiberModP& fiber) {
  return std::visit([](const auto& f) { return curves::is_singular(f); }, fiber);
}

}  // namespace detail

/// a_p of the constant part, or 0 without one.
inline std::int64_t trace_part(const SurfaceSpec& spec, const curves::TraceEngine& engine) {
  if (!spec.constant_part) return 0;
  curves::EllipticBase E(*spec.constant_part);
  return engine.trace(E.reduce(engine.p()));
}

inline TraceSample average_trace(const PreparedSurface& surface, std::uint64_t p) {
  if (auto r = surface.bad.reason(p)) {
    throw std::domain_error("prime " + std::to_string(p) + " is excluded (" + to_string(*r) + ")");
  }
  curves::TraceEngine engine(p);
  ReducedSurface reduced(surface, p);
  const auto points = curves::enumerate_base_points(surface.spec.base, p);

  TraceSample s;
  s.p = p;
  s.n_base_points = static_cast<std::int64_t>(points.size());
  if (surface.constant_family) {
    FiberModP fiber = reduced.fiber_at(points.front());
    std::int64_t a = engine.trace(fiber);
    s.trace_sum = a * s.n_base_points;
    if (detail::fiber_singular(fiber)) {
      s.n_bad_fibers = s.n_base_points;
      s.bad_trace_sum = s.trace_sum;
    }
  } else {
    for (const auto& z : points) {
      FiberModP fiber = reduced.fiber_at(z);
      std::int64_t a = engine.trace(fiber);
      s.trace_sum += a;
      if (detail::fiber_singular(fiber)) {
        ++s.n_bad_fibers;
        s.bad_trace_sum += a;
      }
    }
  }
  s.avg_trace = Rational(Integer(s.trace_sum), Integer(p));
  s.avg_trace.canonicalize();
  const std::int64_t n_good = s.n_base_points - s.n_bad_fibers;
  if (n_good > 0) {
    s.avg_trace_good = Rational(Integer(s.trace_sum - s.bad_trace_sum), Integer(n_good));
    s.avg_trace_good.canonicalize();
  }
  s.trace_part = trace_part(surface.spec, engine);
  s.reduced = s.avg_trace - s.trace_part;
  return s;
}

inline TraceSample average_trace(const SurfaceSpec& spec, std::uint64_t p) {
  return average_trace(PreparedSurface(spec), p);
}

struct TraceBoundRow {
  std::uint64_t p = 0;
  double excess = 0;       // sqrt(p) * max(0, |A_p| - G)
  double running_max = 0;
};

struct TraceBoundReport {
  long bound = 0;  // G = 2 g_X (2 g_C - 2) + f
  std::vector<TraceBoundRow> rows;
  double max_excess = 0;
  std::uint64_t argmax = 0;
  /// Running maximum at the start of the top decade [p_max / 10, p_max].
  double max_before_top_decade = 0;
  bool stable = true;  // no growth of the running maximum over the top decade
};

inline TraceBoundReport trace_bound_check(const SurfaceSpec& spec, long f, const std::vector<TraceSample>& samples) {
  TraceBoundReport r;
  r.bound = 2L * spec.genus_fiber * (2L * spec.base_genus() - 2) + f;
  if (samples.empty()) return r;
  const std::uint64_t p_max = samples.back().p;
  for (const auto& s : samples) {
    double excess = std::abs(s.avg_trace.get_d()) - static_cast<double>(r.bound);
    TraceBoundRow row{s.p, std::sqrt(static_cast<double>(s.p)) * std::max(0.0, excess), 0};
    if (row.excess > r.max_excess) {
      r.max_excess = row.excess;
      r.argmax = s.p;
    }
    row.running_max = r.max_excess;
    if (10 * s.p < p_max) r.max_before_top_decade = r.max_excess;
    r.rows.push_back(row);
  }
  r.stable = r.max_excess <= r.max_before_top_decade;
  return r;
}

}  // namespace jrl::fibration
