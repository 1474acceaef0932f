#include <gtest/gtest.h>

#include <map>
#include <random>

#include "jrl/arith/prime.hpp"
#include "jrl/curves/base_curve.hpp"
#include "jrl/curves/elliptic_group.hpp"
#include "jrl/curves/point_count.hpp"

using namespace jrl::curves;
using jrl::arith::primes_in_range;
using jrl::arith::Rational;

namespace {

EllipticFiberModP curve(std::uint64_t p, std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4,
                        std::int64_t a6) {
  PrimeField F(p);
  return {p, F.from_int(a1), F.from_int(a2), F.from_int(a3), F.from_int(a4), F.from_int(a6)};
}

// Affine points by direct search, plus infinity.
std::vector<CurvePoint> all_points(const EllipticCurveModP& E) {
  std::vector<CurvePoint> pts;
  const auto p = E.field().modulus();
  for (Residue x = 0; x < p; ++x)
    for (Residue y = 0; y < p; ++y)
      if (E.contains(CurvePoint::affine(x, y))) pts.push_back(CurvePoint::affine(x, y));
  pts.push_back(CurvePoint::at_infinity());
  return pts;
}

std::int64_t hyperelliptic_naive(const HyperellipticFiberModP& h) {
  PrimeField F(h.p);
  std::int64_t count = 0;
  for (Residue x = 0; x < h.p; ++x) {
    Residue v = 0;
    for (auto it = h.f.rbegin(); it != h.f.rend(); ++it) v = F.add(F.mul(v, x), *it);
    for (Residue y = 0; y < h.p; ++y)
      if (F.mul(y, y) == v) ++count;
  }
  // Points over x = infinity on the smooth model: roots of y^2 = c_{2g+2}.
  Residue top = h.f.back();
  if (top == 0) return count + 1;
  for (Residue y = 0; y < h.p; ++y)
    if (F.mul(y, y) == top) ++count;
  return count;
}

}  // namespace

TEST(PointCount, Vectors) {
  EXPECT_EQ(count_points_elliptic(curve(5, 0, 0, 0, 0, 1)), 6);
  EXPECT_EQ(count_points_elliptic_naive(curve(3, 0, 0, 0, 1, 0)), 4);
  EXPECT_EQ(count_points_elliptic(curve(5, 0, -1, 0, 0, 0)), 5);
  EXPECT_THROW(count_points_elliptic(curve(3, 0, 0, 0, 1, 0)), std::invalid_argument);
}

TEST(FiberTrace, Vectors) {
  EXPECT_EQ(fiber_trace(curve(5, 0, 0, 0, 0, 1)), 0);
  EXPECT_EQ(fiber_trace(curve(5, 0, -1, 0, 0, 0)), 1);
  EXPECT_EQ(fiber_trace(curve(5, 0, 0, 0, 0, 0)), 0);
}

TEST(PointCount, FastMatchesNaiveOnRandomModels) {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : primes_in_range(5, 61)) {
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(p) - 1);
    for (int i = 0; i < 20; ++i) {
      auto e = curve(p, d(rng), d(rng), d(rng), d(rng), d(rng));
      EXPECT_EQ(count_points_elliptic(e), count_points_elliptic_naive(e)) << "p=" << p;
    }
  }
}

TEST(PointCount, HyperellipticMatchesNaive) {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 29ULL}) {
    std::uniform_int_distribution<Residue> d(0, p - 1);
    TraceEngine engine(p);
    for (int i = 0; i < 20; ++i) {
      HyperellipticFiberModP h{p, std::vector<Residue>(7), 2};
      for (auto& c : h.f) c = d(rng);
      if (i % 2 == 0) h.f.back() = 0;
      EXPECT_EQ(engine.count_points(h), hyperelliptic_naive(h));
    }
  }
}

TEST(PointCount, HyperellipticRequiresExactSlots) {
  TraceEngine engine(7);
  HyperellipticFiberModP h{7, {1, 0, 0, 0, 0, 1}, 2};
  EXPECT_THROW(engine.count_points(h), std::invalid_argument);
}

TEST(PointCount, WeilBoundOnSmoothFibers) {
  std::mt19937_64 rng(9);
  for (std::uint64_t p : primes_in_range(5, 199)) {
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(p) - 1);
    for (int i = 0; i < 10; ++i) {
      auto e = curve(p, d(rng), d(rng), d(rng), d(rng), d(rng));
      auto a = fiber_trace(e);
      if (is_singular(e)) {
        EXPECT_TRUE(within_weil_bound(a, p, 1, 3));
        EXPECT_LE(std::llabs(a), 1);
      } else {
        EXPECT_TRUE(within_weil_bound(a, p, 1)) << a << " " << p;
      }
    }
  }
}

TEST(WeilBound, ExactBoundary) {
  EXPECT_TRUE(within_weil_bound(4, 4 + 0, 1));  // 16 <= 16
  EXPECT_FALSE(within_weil_bound(5, 5, 1));     // 25 > 20
  EXPECT_TRUE(within_weil_bound(7, 5, 1, 3));
}

TEST(HyperellipticSingularity, DetectsRepeatedRoot) {
  HyperellipticFiberModP h{7, {0, 0, 1, 0, 0, 1, 0}, 2};  // x^2 (1 + x^3)
  EXPECT_TRUE(is_singular(h));
  HyperellipticFiberModP g{7, {1, 0, 0, 0, 0, 1, 0}, 2};  // x^5 + 1
  EXPECT_FALSE(is_singular(g));
}

TEST(BaseCurve, EnumerateProjectiveLine) {
  EXPECT_EQ(enumerate_base_points(ProjectiveLine{}, 5).size(), 6U);
  EXPECT_THROW(enumerate_base_points(ProjectiveLine{}, 3), std::invalid_argument);
}

TEST(BaseCurve, EnumerateEllipticBase) {
  EllipticBase E(WeierstrassCoefficients<Rational>{0, 0, 0, -1, 0});
  EXPECT_EQ(enumerate_base_points(E, 5).size(), 8U);
  EXPECT_THROW(enumerate_base_points(E, 2), std::invalid_argument);
  for (std::uint64_t p : primes_in_range(5, 97)) {
    auto pts = enumerate_base_points(E, p);
    EXPECT_EQ(static_cast<std::int64_t>(pts.size()), count_points_elliptic_naive(E.reduce(p)));
    EllipticCurveModP curve(E.reduce(p));
    for (const auto& P : pts) EXPECT_TRUE(curve.contains(P));
  }
  EXPECT_THROW(EllipticBase(WeierstrassCoefficients<Rational>{0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST(BaseCurve, BadReductionSignalled) {
  EllipticBase E(WeierstrassCoefficients<Rational>{0, 0, 0, -1, 0});
  EXPECT_FALSE(E.bad_reduction_at(5));
  EllipticBase F(WeierstrassCoefficients<Rational>{0, 0, 0, 0, 7});
  EXPECT_THROW(enumerate_base_points(F, 7), std::domain_error);
}

TEST(GroupLaw, Vectors) {
  EllipticCurveModP E(curve(5, 0, 0, 0, -1, 0));
  auto O = CurvePoint::at_infinity();
  auto P = CurvePoint::affine(0, 0);
  EXPECT_EQ(E.add(P, O), P);
  EXPECT_EQ(E.add(P, P), O);
  auto Q = CurvePoint::affine(2, 1);
  ASSERT_TRUE(E.contains(Q));
  EXPECT_TRUE(E.contains(E.add(Q, Q)));
  EXPECT_THROW(E.add(CurvePoint::affine(1, 1), P), std::invalid_argument);
  EXPECT_EQ(E.multiply(Q, 1), Q);
  EXPECT_EQ(E.multiply(P, 2), O);
  EXPECT_EQ(E.multiply(Q, 8), E.add(E.add(E.add(Q, Q), E.add(Q, Q)), E.add(E.add(Q, Q), E.add(Q, Q))));
  auto Q2 = E.add(Q, Q), Q4 = E.add(Q2, Q2);
  EXPECT_EQ(E.multiply(Q, 8), E.add(Q4, Q4));
  EXPECT_THROW(E.multiply(Q, 0), std::invalid_argument);
}

TEST(GroupLaw, AxiomsOnGeneralModels) {
  std::mt19937_64 rng(21);
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 23ULL}) {
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(p) - 1);
    for (int trial = 0; trial < 5; ++trial) {
      auto c = curve(p, d(rng), d(rng), d(rng), d(rng), d(rng));
      if (is_singular(c)) continue;
      EllipticCurveModP E(c);
      auto pts = all_points(E);
      std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
      for (int i = 0; i < 40; ++i) {
        auto P = pts[pick(rng)], Q = pts[pick(rng)], R = pts[pick(rng)];
        EXPECT_EQ(E.add(E.add(P, Q), R), E.add(P, E.add(Q, R)));
        EXPECT_EQ(E.add(P, Q), E.add(Q, P));
        EXPECT_EQ(E.add(P, E.negate(P)), CurvePoint::at_infinity());
        EXPECT_EQ(E.multiply(P, static_cast<std::int64_t>(pts.size())), CurvePoint::at_infinity());
      }
    }
  }
}

TEST(GroupLaw, KernelImageCounting) {
  EllipticFiberModP c = curve(7, 0, 0, 0, -1, 0);
  for (std::uint64_t p : primes_in_range(5, 61)) {
    c = curve(p, 0, 0, 0, -1, 0);
    EllipticCurveModP E(c);
    auto pts = all_points(E);
    for (std::int64_t n : {2, 3, 4}) {
      std::map<CurvePoint, int> image;
      std::size_t kernel = 0;
      for (const auto& P : pts) {
        auto Q = E.multiply(P, n);
        if (Q.infinity) ++kernel;
        ++image[Q];
      }
      EXPECT_EQ(kernel * image.size(), pts.size()) << "p=" << p << " n=" << n;
    }
  }
}
