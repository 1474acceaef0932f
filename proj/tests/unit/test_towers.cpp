#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "jrl/conductor/bounds.hpp"
#include "jrl/io/surface_toml.hpp"
#include "jrl/towers/cover.hpp"
#include "jrl/towers/orbits.hpp"
#include "jrl/towers/tower.hpp"

using namespace jrl;
using namespace jrl::towers;

namespace {

long brute_divisors(long n) {
  long c = 0;
  for (long d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

// Orbit of v under GL_m(Z/n) by flood fill from v alone.
std::set<long> orbit_of(const std::vector<ModMatrix>& group, const std::vector<long>& v, long n) {
  std::set<long> seen{encode(v, n)};
  std::vector<std::vector<long>> stack{v};
  while (!stack.empty()) {
    auto w = stack.back();
    stack.pop_back();
    for (const auto& g : group) {
      auto u = apply(g, w, n);
      if (seen.insert(encode(u, n)).second) stack.push_back(u);
    }
  }
  return seen;
}

fibration::PreparedSurface base_elliptic() {
  return fibration::PreparedSurface(io::load_surface(std::string(JRL_DATA_DIR) + "/surfaces/base-elliptic.toml"));
}

}  // namespace

TEST(Divisors, VectorsAndBruteForce) {
  EXPECT_EQ(divisor_count(1), 1);
  EXPECT_EQ(divisor_count(6), 4);
  EXPECT_EQ(divisor_count(12), 6);
  EXPECT_THROW(divisor_count(0), std::invalid_argument);
  EXPECT_THROW(divisor_count(-3), std::invalid_argument);
  for (long n = 1; n <= 3000; ++n) ASSERT_EQ(divisor_count(n), brute_divisors(n)) << n;
}

TEST(Orbits, FullEnumerationVectors) {
  EXPECT_EQ(orbit_count_full(2, 2).count, 2);
  EXPECT_EQ(orbit_count_full(2, 2).group_order, 6);
  EXPECT_EQ(orbit_count_full(4, 2).count, 3);
  EXPECT_EQ(orbit_count_full(1, 2).count, 1);
  // |GL_2(F_p)| = (p^2 - 1)(p^2 - p)
  for (long p : {3L, 5L, 7L}) EXPECT_EQ(orbit_count_full(p, 2).group_order, (p * p - 1) * (p * p - p));
}

TEST(Orbits, BudgetExceeded) {
  EXPECT_THROW(orbit_count_full(9, 3), BudgetExceeded);
  EXPECT_THROW(orbit_count_full(40, 2), BudgetExceeded);
  EXPECT_NO_THROW(orbit_count_full(2, 3));
}

TEST(Orbits, ThreeMethodsAgreeUpToEight) {
  std::mt19937_64 rng(7);
  for (long n = 1; n <= 8; ++n) {
    auto group = general_linear_group(n, 2);
    const long full = count_orbits(group, n, 2);
    EXPECT_EQ(full, divisor_count(n)) << n;
    EXPECT_EQ(orbit_count_content(n, 2, rng, 500).count, full) << n;
    EXPECT_EQ(burnside_count(group, n, rng).count, full) << n;
  }
}

TEST(Orbits, ContentVectors) {
  std::mt19937_64 rng(11);
  EXPECT_EQ(orbit_count_content(30, 4, rng, 1000).count, 8);
  EXPECT_EQ(orbit_count_content(9, 2, rng, 1000).count, 3);
  EXPECT_EQ(orbit_count_content(9, 2, rng, 10).count, orbit_count_full(9, 2).count);
  for (long p : {2L, 3L, 13L, 29L}) EXPECT_EQ(orbit_count_content(p, 2, rng, 200).count, 2);
  EXPECT_THROW(orbit_count_content(5, 1, rng), std::invalid_argument);
}

TEST(Orbits, ContentClassesAreOrbits) {
  for (long n : {6L, 8L, 9L}) {
    auto group = general_linear_group(n, 2);
    for (long d : divisors(n)) {
      auto orbit = orbit_of(group, {d % n, 0}, n);
      for (long code = 0; code < n * n; ++code) {
        EXPECT_EQ(orbit.count(code) == 1, content(decode(code, n, 2), n) == d) << n << " " << d << " " << code;
      }
    }
  }
}

TEST(Orbits, CanonicalFormTransformIsInvertible) {
  std::mt19937_64 rng(3);
  for (long n : {12L, 30L}) {
    std::uniform_int_distribution<long> e(0, n - 1);
    for (int s = 0; s < 200; ++s) {
      std::vector<long> v(6);
      for (auto& x : v) x = e(rng);
      auto cf = canonical_form(v, n);
      EXPECT_TRUE(invertible(cf.transform, n));
      EXPECT_EQ(apply(cf.transform, v, n), cf.form);
      EXPECT_EQ(cf.form[0], content(v, n) % n);
    }
  }
}

TEST(Orbits, DeterminantAgainstCofactorExpansion) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(0, 29);
  for (int s = 0; s < 200; ++s) {
    ModMatrix g{3, std::vector<long>(9)};
    for (auto& x : g.a) x = e(rng);
    long det = g.at(0, 0) * (g.at(1, 1) * g.at(2, 2) - g.at(1, 2) * g.at(2, 1)) -
               g.at(0, 1) * (g.at(1, 0) * g.at(2, 2) - g.at(1, 2) * g.at(2, 0)) +
               g.at(0, 2) * (g.at(1, 0) * g.at(2, 1) - g.at(1, 1) * g.at(2, 0));
    EXPECT_EQ(determinant_mod(g, 30), ((det % 30) + 30) % 30);
  }
}

TEST(Burnside, Vectors) {
  std::mt19937_64 rng(1);
  for (long n : {2L, 5L, 6L}) EXPECT_EQ(burnside_count({ModMatrix::identity(2)}, n, rng).count, n * n);
  EXPECT_EQ(burnside_count(general_linear_group(2, 2), 2, rng).count, 2);
  // {I, A} with A of order 3 is not closed.
  ModMatrix A{2, {1, 1, 0, 1}};
  EXPECT_THROW(burnside_count({ModMatrix::identity(2), A}, 3, rng), std::invalid_argument);
  EXPECT_THROW(burnside_count({}, 3, rng), std::invalid_argument);
}

TEST(Burnside, SubgroupInequalities) {
  std::mt19937_64 rng(17);
  for (long n : {4L, 6L, 8L}) {
    const auto G = general_linear_group(n, 2);
    const long dn = divisor_count(n);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<ModMatrix> gens;
      for (int k = 0; k < trial % 3; ++k) gens.push_back(random_invertible(n, 2, rng));
      auto H = generated_subgroup(gens, n, 2);
      ASSERT_EQ(G.size() % H.size(), 0u);
      const long index = static_cast<long>(G.size() / H.size());
      const long orbits = burnside_count(H, n, rng).count;
      EXPECT_EQ(orbits, count_orbits(H, n, 2));
      EXPECT_GE(orbits, dn);
      EXPECT_LE(orbits, index * dn);
    }
  }
}

TEST(MainBound, Vectors) {
  // orbits = |A|: the geometric bound 2 g_X (2 g_C' - 2) + f'
  EXPECT_EQ(main_bound(16, 16, 2, 3, 10).value, Rational(2 * 2 * 4 + 10));
  // kind a, n = 4: (3/16) * 16 f = 3 f
  for (long f : {1L, 4L, 9L}) {
    auto pb = conductor::pullback_conductor(f, 1, 16);
    auto b = main_bound(divisor_count(4), 16, 1, pb.g_prime, pb.f_prime);
    EXPECT_EQ(b.value, Rational(3 * f));
    ASSERT_TRUE(b.refined.has_value());
    EXPECT_EQ(*b.refined, Rational(3 * f));
  }
  EXPECT_EQ(main_bound(1, 9, 1, 1, 18).value, Rational(2));
  EXPECT_FALSE(main_bound(1, 9, 2, 1, 18).refined.has_value());
  EXPECT_THROW(main_bound(10, 9, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(main_bound(1, 9, 1, 1, -1), std::invalid_argument);
}

TEST(Tower, KindARowsAreFTimesIndexTimesD) {
  CoverSpec spec{CoverKind::MultiplicationOnEllipticBase, 1, 1, 2};
  auto rows = tower_bounds(spec, 4, 1, 500);
  ASSERT_EQ(rows.size(), 500u);
  EXPECT_EQ(rows[0].f_n, 4);
  EXPECT_EQ(rows[0].bound, Rational(8));
  double sum = 0;
  for (const auto& r : rows) {
    EXPECT_EQ(r.f_n, Integer(r.n) * r.n * 4);
    EXPECT_EQ(r.bound, Rational(4 * 2 * brute_divisors(r.n)));
    sum += r.bound.get_d() / std::log(r.f_n.get_d());
    EXPECT_NEAR(r.running_avg, sum / static_cast<double>(r.n), 1e-9);
    if (r.n >= 3) {
      ASSERT_TRUE(r.kappa_n.has_value());
      const double ln = std::log(static_cast<double>(r.n));
      EXPECT_NEAR(std::pow(static_cast<double>(r.n), *r.kappa_n / std::log(ln)), static_cast<double>(r.d_n), 1e-6);
    }
  }
}

TEST(Tower, KindBRows) {
  CoverSpec spec{CoverKind::JacobianPullback, 1, 2, 1};
  auto rows = tower_bounds(spec, 3, 2, 40);
  for (const auto& r : rows) {
    Integer n4 = Integer(r.n) * r.n * r.n * r.n;
    EXPECT_EQ(r.f_n, n4 * 3);
    // (2 g_X (2 g_C - 2) + f) I d(n)
    EXPECT_EQ(r.bound, Rational((2 * 2 * 2 + 3) * brute_divisors(r.n)));
  }
  EXPECT_THROW(tower_bounds(spec, 3, 2, 0), std::invalid_argument);
  EXPECT_THROW(tower_bounds({CoverKind::MultiplicationOnEllipticBase, 1, 2, 1}, 3, 1, 5), std::invalid_argument);
  EXPECT_THROW(tower_bounds({CoverKind::JacobianPullback, 1, 0, 1}, 3, 1, 5), std::invalid_argument);
}

TEST(Tower, FBaseOneSkipsFirstLogarithm) {
  auto rows = tower_bounds({}, 1, 1, 3);
  EXPECT_TRUE(std::isnan(rows[0].bound_over_logf));
  EXPECT_NEAR(rows[1].running_avg, (2.0 / std::log(4.0)) / 2.0, 1e-12);
}

TEST(DivisorSum, Vectors) {
  EXPECT_NEAR(divisor_sum_ratio(2).ratio, 3.0 / (2.0 * std::log(2.0)), 1e-12);
  Integer brute = 0;
  for (long n = 1; n <= 1000; ++n) brute += brute_divisors(n);
  EXPECT_EQ(divisor_sum_ratio(1000).sum, brute);
  auto big = divisor_sum_ratio(100000);
  EXPECT_NEAR(big.dirichlet, 1.0134, 1e-4);
  EXPECT_LT(std::abs(big.ratio - big.dirichlet) / big.dirichlet, 0.02);
  auto small = divisor_sum_ratio(1000);
  EXPECT_LT(std::abs(big.ratio - big.dirichlet), std::abs(small.ratio - small.dirichlet));
  EXPECT_THROW(divisor_sum_ratio(1), std::invalid_argument);
}

TEST(Cover, BaseEllipticAtFiveNTwo) {
  auto s = base_elliptic();
  auto r = verify_cover_identities(s, 2, 5);
  EXPECT_EQ(r.n_points, 8);
  EXPECT_EQ(r.kernel, 4);
  EXPECT_EQ(r.image, 2);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.group_order, 4);
}

TEST(Cover, KernelByRepeatedAddition) {
  auto s = base_elliptic();
  const auto& base = std::get<curves::EllipticBase>(s.spec.base);
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL}) {
    curves::EllipticCurveModP C(base.reduce(p));
    for (long n : {2L, 3L}) {
      if (p % static_cast<std::uint64_t>(n) == 0) continue;
      long kernel = 0;
      for (const auto& z : curves::enumerate_base_points(s.spec.base, p)) {
        auto acc = curves::CurvePoint::at_infinity();
        for (long k = 0; k < n; ++k) acc = C.add(acc, z);
        kernel += acc.infinity;
      }
      auto r = verify_cover_identities(s, n, p);
      EXPECT_EQ(r.kernel, kernel) << p << " " << n;
      EXPECT_TRUE(r.ok()) << p << " " << n;
      // x^3 - x has the three roots 0, 1, -1
      if (n == 2) EXPECT_EQ(r.kernel, 4);
    }
  }
  auto r7 = verify_cover_identities(s, 3, 7);
  EXPECT_EQ(r7.kernel * r7.image, r7.n_points);
}

TEST(Cover, DegenerateAndRejected) {
  auto s = base_elliptic();
  auto r = verify_cover_identities(s, 1, 11);
  EXPECT_EQ(r.kernel, 1);
  EXPECT_EQ(r.image, r.n_points);
  EXPECT_EQ(r.pulled_back_sum, r.image_sum);
  EXPECT_THROW(verify_cover_identities(s, 10, 5), std::invalid_argument);
  EXPECT_THROW(verify_cover_identities(s, 2, 31), std::domain_error);
  fibration::PreparedSurface p1(io::load_surface(std::string(JRL_DATA_DIR) + "/surfaces/legendre.toml"));
  EXPECT_THROW(verify_cover_identities(p1, 2, 5), std::invalid_argument);
}
