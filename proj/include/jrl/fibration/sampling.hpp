#pragma once

#include <cstdint>
#include <vector>

#include "jrl/arith/prime.hpp"
#include "jrl/fibration/average_trace.hpp"
#include "jrl/util/parallel.hpp"

namespace jrl::fibration {

/// Primes in [lo, hi] outside the bad set, ascending.
inline std::vector<std::uint64_t> good_primes(const PreparedSurface& surface, std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < lo) return out;
  for (auto p : arith::primes_in_range(lo, hi))
    if (!surface.bad.contains(p)) out.push_back(p);
  return out;
}

inline std::vector<TraceSample> trace_samples(const PreparedSurface& surface, const std::vector<std::uint64_t>& primes,
                                              unsigned jobs) {
  return util::parallel_map(primes, [&](std::uint64_t p) { return average_trace(surface, p); }, jobs);
}

}  // namespace jrl::fibration
