#pragma once

// Counting identities for the multiplication-by-n self-cover of an elliptic
// base, checked on F_p-points.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "jrl/curves/elliptic_group.hpp"
#include "jrl/fibration/average_trace.hpp"
#include "jrl/towers/tower.hpp"

namespace jrl::towers {

struct CoverReport {
  std::uint64_t p = 0;
  long n = 0;
  long n_points = 0;    // #C(F_p)
  long kernel = 0;      // #C[n](F_p)
  long image = 0;       // #[n]C(F_p)
  long group_order = 0;  // n^2
  bool kernel_image_ok = false;
  bool preimages_ok = false;
  bool trace_identity_ok = false;
  std::int64_t pulled_back_sum = 0;  // sum over z' of a([n] z')
  std::int64_t image_sum = 0;        // sum over z in the image of a(z)
  Rational pulled_back_average;      // pulled_back_sum / p
  Rational predicted_average;        // kernel * image_sum / p

  bool ok() const { return kernel_image_ok && preimages_ok && trace_identity_ok; }
};

inline CoverReport verify_cover_identities(const fibration::PreparedSurface& surface, long n, std::uint64_t p) {
  if (!surface.spec.over_elliptic_base()) throw std::invalid_argument("cover verification needs an elliptic base");
  if (n < 1) throw std::invalid_argument("cover verification: n must be >= 1");
  if (std::gcd(static_cast<std::uint64_t>(n), p) != 1) {
    throw std::invalid_argument("cover verification: n = " + std::to_string(n) + " shares a factor with p = " +
                                std::to_string(p));
  }
  if (auto r = surface.bad.reason(p)) {
    throw std::domain_error("prime " + std::to_string(p) + " is excluded (" + fibration::to_string(*r) + ")");
  }
  const auto& base = std::get<curves::EllipticBase>(surface.spec.base);
  const auto points = curves::enumerate_base_points(surface.spec.base, p);
  const curves::EllipticCurveModP C(base.reduce(p));
  const curves::TraceEngine engine(p);
  const fibration::ReducedSurface reduced(surface, p);

  std::map<curves::CurvePoint, std::int64_t> trace;
  for (const auto& z : points) trace[z] = engine.trace(reduced.fiber_at(z));

  CoverReport r;
  r.p = p;
  r.n = n;
  r.group_order = n * n;
  r.n_points = static_cast<long>(points.size());
  std::map<curves::CurvePoint, long> preimages;
  for (const auto& z : points) {
    const auto w = C.multiply(z, n);
    ++preimages[w];
    if (w.infinity) ++r.kernel;
    r.pulled_back_sum += trace.at(w);
  }
  r.image = static_cast<long>(preimages.size());
  r.kernel_image_ok = r.kernel * r.image == r.n_points;
  r.preimages_ok = std::all_of(preimages.begin(), preimages.end(),
                               [&](const auto& kv) { return kv.second == r.kernel; });
  for (const auto& [z, count] : preimages) r.image_sum += trace.at(z);
  r.trace_identity_ok = r.pulled_back_sum == r.kernel * r.image_sum;
  r.pulled_back_average = Rational(Integer(r.pulled_back_sum), Integer(p));
  r.pulled_back_average.canonicalize();
  r.predicted_average = Rational(Integer(r.kernel * r.image_sum), Integer(p));
  r.predicted_average.canonicalize();
  return r;
}

}  // namespace jrl::towers
