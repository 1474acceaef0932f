#pragma once

#include <stdexcept>

namespace jrl::conductor {

/// 2 g_X (2 g_C - 2) + f + 4 dim B. Negative values force rank 0.
inline long geometric_bound(long g_fiber, long g_base, long f, long dim_b) {
  if (g_fiber < 1 || g_base < 0 || f < 0 || dim_b < 0) {
    throw std::invalid_argument("geometric_bound: need g_X >= 1 and g_C, f, dim B >= 0");
  }
  return 2 * g_fiber * (2 * g_base - 2) + f + 4 * dim_b;
}

struct PullbackResult {
  long f_prime = 0;
  long g_prime = 0;
  long lhs = 0;  // 2 g' - 2 + f'
  long rhs = 0;  // |A| (2 g_C - 2 + f)
  bool holds = false;
};

/// Conductor degree and genus after an unramified abelian cover of degree |A|.
inline PullbackResult pullback_conductor(long f, long g_base, long group_order) {
  if (group_order <= 0) throw std::invalid_argument("pullback_conductor: group order must be >= 1");
  if (f < 0 || g_base < 0) throw std::invalid_argument("pullback_conductor: f and g_C must be >= 0");
  if (g_base == 0 && group_order > 1) {
    throw std::invalid_argument("pullback_conductor: the projective line has no connected unramified covers");
  }
  PullbackResult r;
  r.f_prime = group_order * f;
  const long euler = group_order * (2 * g_base - 2);  // 2 g' - 2
  r.g_prime = euler / 2 + 1;
  r.lhs = 2 * r.g_prime - 2 + r.f_prime;
  r.rhs = group_order * (2 * g_base - 2 + f);
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace jrl::conductor
