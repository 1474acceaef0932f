#pragma once

// Rank bounds along towers of unramified abelian covers.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jrl/towers/orbits.hpp"

namespace jrl::towers {

using Integer = mpz_class;
using Rational = mpq_class;

enum class CoverKind { MultiplicationOnEllipticBase, JacobianPullback };

inline const char* to_string(CoverKind k) {
  return k == CoverKind::MultiplicationOnEllipticBase ? "a" : "b";
}

struct CoverSpec {
  CoverKind kind = CoverKind::MultiplicationOnEllipticBase;
  long n = 1;
  int base_genus = 1;
  long galois_index = 1;  // Serre index bound, user supplied

  Integer group_order() const {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(2 * base_genus));
    return r;
  }

  void validate() const {
    if (n < 1) throw std::invalid_argument("cover: n must be >= 1");
    if (galois_index < 1) throw std::invalid_argument("cover: Galois index must be >= 1");
    if (base_genus < 1) throw std::invalid_argument("cover: base genus must be >= 1 for an unramified tower");
    if (kind == CoverKind::MultiplicationOnEllipticBase && base_genus != 1) {
      throw std::invalid_argument("cover: kind a needs an elliptic base (g_C = 1)");
    }
  }
};

struct MainBound {
  Rational value;                  // (orbits/|A|) (2 g_X (2 g_C' - 2) + f')
  std::optional<Rational> refined;  // g_X = 1: (orbits/|A|) (4 g_C' - 4 + f')
};

inline MainBound main_bound(const Integer& orbits, const Integer& group_order, long g_fiber, const Integer& g_cover,
                            const Integer& f_cover) {
  if (orbits < 0 || group_order < 1 || g_fiber < 0 || g_cover < 0 || f_cover < 0) {
    throw std::invalid_argument("main_bound: inputs must be non-negative and |A| >= 1");
  }
  if (orbits > group_order) throw std::invalid_argument("main_bound: more orbits than group elements");
  const Rational factor(orbits, group_order);
  MainBound b;
  b.value = factor * Rational(2 * g_fiber * (2 * g_cover - 2) + f_cover);
  b.value.canonicalize();
  if (g_fiber == 1) {
    b.refined = factor * Rational(4 * g_cover - 4 + f_cover);
    b.refined->canonicalize();
  }
  return b;
}

inline MainBound main_bound(long orbits, long group_order, long g_fiber, long g_cover, long f_cover) {
  return main_bound(Integer(orbits), Integer(group_order), g_fiber, Integer(g_cover), Integer(f_cover));
}

struct TowerRow {
  long n = 0;
  long d_n = 0;
  Integer f_n;
  Rational bound;
  double bound_over_logf = 0;  // NaN when f_n = 1
  double running_avg = 0;
  std::optional<double> kappa_n;  // n >= 3
};

/// Smallest kappa with d(n) = n^(kappa / log log n).
inline double kappa(long n) {
  const double ln = std::log(static_cast<double>(n));
  return std::log(static_cast<double>(divisor_count(n))) * std::log(ln) / ln;
}

/// Rows n = 1..n_max. The conductor and genus of each cover come from the
/// pullback formula; orbits are bounded by I d(n).
inline std::vector<TowerRow> tower_bounds(CoverSpec spec, long f_base, long g_fiber, long n_max) {
  if (n_max < 1) throw std::invalid_argument("tower_bounds: n_max must be >= 1");
  if (f_base < 1) throw std::invalid_argument("tower_bounds: f_base must be >= 1");
  if (g_fiber < 1) throw std::invalid_argument("tower_bounds: g_X must be >= 1");
  spec.n = 1;
  spec.validate();
  std::vector<TowerRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  double sum = 0;
  for (long n = 1; n <= n_max; ++n) {
    spec.n = n;
    const Integer order = spec.group_order();
    TowerRow r;
    r.n = n;
    r.d_n = divisor_count(n);
    r.f_n = order * f_base;
    const Integer g_cover = order * (2 * spec.base_genus - 2) / 2 + 1;
    const Integer orbits = Integer(spec.galois_index) * r.d_n;
    // I d(n) may exceed |A| for small n; the bound formula is used as stated.
    const Rational factor(orbits, order);
    if (spec.kind == CoverKind::MultiplicationOnEllipticBase) {
      r.bound = factor * Rational(r.f_n);
    } else {
      r.bound = factor * Rational(2 * g_fiber * (2 * g_cover - 2) + r.f_n);
    }
    r.bound.canonicalize();
    if (r.f_n > 1) {
      const double logf = std::log(r.f_n.get_d());
      r.bound_over_logf = r.bound.get_d() / logf;
      sum += r.bound_over_logf;
    } else {
      r.bound_over_logf = std::nan("");
    }
    r.running_avg = sum / static_cast<double>(n);
    if (n >= 3) r.kappa_n = kappa(n);
    rows.push_back(std::move(r));
  }
  return rows;
}

struct DivisorSum {
  long x = 0;
  Integer sum;   // sum_{n <= x} d(n)
  double ratio = 0;  // sum / (x ln x)
  double dirichlet = 0;  // (ln x + 2 gamma - 1) / ln x
};

inline DivisorSum divisor_sum_ratio(long x) {
  if (x < 2) throw std::invalid_argument("divisor_sum_ratio: x must be >= 2");
  constexpr long double kEulerGamma = 0.57721566490153286060651209L;
  DivisorSum r;
  r.x = x;
  for (long k = 1; k <= x; ++k) r.sum += x / k;
  const long double lx = std::log(static_cast<long double>(x));
  r.ratio = static_cast<double>(static_cast<long double>(r.sum.get_d()) / (static_cast<long double>(x) * lx));
  r.dirichlet = static_cast<double>((lx + 2 * kEulerGamma - 1) / lx);
  return r;
}

}  // namespace jrl::towers
