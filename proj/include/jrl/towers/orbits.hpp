#pragma once

// Orbits of GL_m(Z/n) and its subgroups on (Z/n)^m.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace jrl::towers {

enum class OrbitMethod { FullEnumeration, ContentCanonicalForm, BurnsideFixedPoints };

inline const char* to_string(OrbitMethod m) {
  switch (m) {
    case OrbitMethod::FullEnumeration: return "full";
    case OrbitMethod::ContentCanonicalForm: return "content";
    case OrbitMethod::BurnsideFixedPoints: return "burnside";
  }
  return "?";
}

struct OrbitResult {
  long n = 0;
  int m = 0;
  long count = 0;
  OrbitMethod method = OrbitMethod::FullEnumeration;
  long group_order = 0;        // full enumeration and Burnside
  long validation_samples = 0;  // content method
};

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Number of positive divisors, by trial division.
inline long divisor_count(long n) {
  if (n <= 0) throw std::invalid_argument("divisor_count: n must be >= 1");
  long count = 1;
  for (long q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Square matrix mod n, row-major.
struct ModMatrix {
  int m = 0;
  std::vector<long> a;

  long at(int i, int j) const { return a[static_cast<std::size_t>(i * m + j)]; }
  long& at(int i, int j) { return a[static_cast<std::size_t>(i * m + j)]; }

  static ModMatrix identity(int m) {
    ModMatrix I{m, std::vector<long>(static_cast<std::size_t>(m * m), 0)};
    for (int i = 0; i < m; ++i) I.at(i, i) = 1;
    return I;
  }
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

inline ModMatrix multiply(const ModMatrix& x, const ModMatrix& y, long n) {
  ModMatrix z{x.m, std::vector<long>(x.a.size(), 0)};
  for (int i = 0; i < x.m; ++i)
    for (int k = 0; k < x.m; ++k) {
      long xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < x.m; ++j) z.at(i, j) = (z.at(i, j) + xik * y.at(k, j)) % n;
    }
  return z;
}

inline std::vector<long> apply(const ModMatrix& g, const std::vector<long>& v, long n) {
  std::vector<long> w(v.size(), 0);
  for (int i = 0; i < g.m; ++i) {
    long s = 0;
    for (int j = 0; j < g.m; ++j) s += g.at(i, j) * v[static_cast<std::size_t>(j)];
    w[static_cast<std::size_t>(i)] = s % n;
  }
  return w;
}

/// Integer determinant by fraction-free elimination, reduced mod n.
inline long determinant_mod(const ModMatrix& g, long n) {
  const int m = g.m;
  std::vector<__int128> a(g.a.begin(), g.a.end());
  auto at = [&](int i, int j) -> __int128& { return a[static_cast<std::size_t>(i * m + j)]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < m && at(r, k) == 0) ++r;
      if (r == m) return 0;
      for (int j = 0; j < m; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  __int128 det = at(m - 1, m - 1) * sign;
  long r = static_cast<long>(det % n);
  return r < 0 ? r + n : r;
}

inline bool invertible(const ModMatrix& g, long n) { return std::gcd(determinant_mod(g, n), n) == 1; }

inline long encode(const std::vector<long>& v, long n) {
  long code = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * n + *it;
  return code;
}

inline std::vector<long> decode(long code, long n, int m) {
  std::vector<long> v(static_cast<std::size_t>(m));
  for (auto& x : v) {
    x = code % n;
    code /= n;
  }
  return v;
}

inline long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// All of GL_m(Z/n), when n^(m^2) <= budget.
inline std::vector<ModMatrix> general_linear_group(long n, int m, double budget = 1e6) {
  if (n < 1 || m < 1) throw std::invalid_argument("general_linear_group: need n >= 1 and m >= 1");
  const double candidates = std::pow(static_cast<double>(n), m * m);
  if (candidates > budget) {
    throw BudgetExceeded("enumerating GL_" + std::to_string(m) + "(Z/" + std::to_string(n) + ") needs " +
                         std::to_string(static_cast<long long>(candidates)) +
                         " candidates, over the budget; use the content method");
  }
  const long total = static_cast<long>(candidates);
  std::vector<ModMatrix> group;
  ModMatrix g{m, std::vector<long>(static_cast<std::size_t>(m * m), 0)};
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (auto& x : g.a) {
      x = c % n;
      c /= n;
    }
    if (invertible(g, n)) group.push_back(g);
  }
  return group;
}

/// Orbit count of the group generated by (or equal to) `elements`, by flood fill.
inline long count_orbits(const std::vector<ModMatrix>& elements, long n, int m) {
  const long size = ipow(n, m);
  std::vector<char> seen(static_cast<std::size_t>(size), 0);
  long orbits = 0;
  std::vector<long> stack;
  for (long start = 0; start < size; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++orbits;
    seen[static_cast<std::size_t>(start)] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      long code = stack.back();
      stack.pop_back();
      auto v = decode(code, n, m);
      for (const auto& g : elements) {
        long w = encode(apply(g, v, n), n);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return orbits;
}

inline OrbitResult orbit_count_full(long n, int m, double budget = 1e6) {
  auto group = general_linear_group(n, m, budget);
  return {n, m, count_orbits(group, n, m), OrbitMethod::FullEnumeration, static_cast<long>(group.size()), 0};
}

/// Rejection sampling of a uniformly random element of GL_m(Z/n).
template <class Rng>
ModMatrix random_invertible(long n, int m, Rng& rng) {
  std::uniform_int_distribution<long> entry(0, n - 1);
  ModMatrix g{m, std::vector<long>(static_cast<std::size_t>(m * m), 0)};
  for (;;) {
    for (auto& x : g.a) x = entry(rng);
    if (invertible(g, n)) return g;
  }
}

inline long content(const std::vector<long>& v, long n) {
  long g = n;
  for (long x : v) g = std::gcd(g, x);
  return g;
}

struct CanonicalForm {
  std::vector<long> form;  // (d, 0, ..., 0) with d | n
  ModMatrix transform;     // invertible, transform * v = form
};

/// Reduces v to (gcd(v, n), 0, ..., 0) by elementary invertible operations
/// and a final unit scaling.
inline CanonicalForm canonical_form(std::vector<long> v, long n) {
  const int m = static_cast<int>(v.size());
  ModMatrix T = ModMatrix::identity(m);
  auto add_row = [&](int dst, int src, long k) {  // e_dst += k e_src
    k = ((k % n) + n) % n;
    v[static_cast<std::size_t>(dst)] = (v[static_cast<std::size_t>(dst)] + k * v[static_cast<std::size_t>(src)]) % n;
    for (int j = 0; j < m; ++j) T.at(dst, j) = (T.at(dst, j) + k * T.at(src, j)) % n;
  };
  auto swap_rows = [&](int i, int j) {
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    for (int c = 0; c < m; ++c) std::swap(T.at(i, c), T.at(j, c));
  };
  // Euclid on integer representatives moves the gcd into slot 0.
  for (int i = 1; i < m; ++i) {
    while (v[static_cast<std::size_t>(i)] != 0) {
      long q = v[0] / v[static_cast<std::size_t>(i)];
      add_row(0, i, -q);
      swap_rows(0, i);
    }
  }
  // v[0] = g with gcd(g, n) = d; pick a unit u with u g = d mod n.
  const long d = std::gcd(v[0], n);
  if (v[0] % n != d % n) {
    long unit = 0;
    for (long u = 1; u < n; ++u) {
      if (std::gcd(u, n) == 1 && (u * v[0]) % n == d % n) {
        unit = u;
        break;
      }
    }
    if (unit == 0) throw std::logic_error("canonical_form: no unit adjustment found");
    v[0] = (v[0] * unit) % n;
    for (int j = 0; j < m; ++j) T.at(0, j) = (T.at(0, j) * unit) % n;
  }
  return {v, T};
}

/// Orbit count from the content classification: orbits are indexed by the
/// divisors of n. Validated on random vectors and random group elements.
template <class Rng>
OrbitResult orbit_count_content(long n, int m, Rng& rng, long samples = 10000) {
  if (n < 1 || m < 2) throw std::invalid_argument("orbit_count_content: need n >= 1 and m >= 2");
  std::uniform_int_distribution<long> entry(0, n - 1);
  std::vector<long> v(static_cast<std::size_t>(m));
  for (long s = 0; s < samples; ++s) {
    for (auto& x : v) x = entry(rng);
    const long c = content(v, n);
    auto cf = canonical_form(v, n);
    if (!invertible(cf.transform, n) || apply(cf.transform, v, n) != cf.form || cf.form[0] != c % n) {
      throw std::logic_error("canonical form reduction failed");
    }
    for (std::size_t i = 1; i < cf.form.size(); ++i)
      if (cf.form[i] != 0) throw std::logic_error("canonical form reduction failed");
    auto g = random_invertible(n, m, rng);
    if (content(apply(g, v, n), n) != c) throw std::logic_error("content is not invariant");
  }
  return {n, m, static_cast<long>(divisors(n).size()), OrbitMethod::ContentCanonicalForm, 0, samples};
}

inline long matrix_code(const ModMatrix& g, long n) {
  long code = 0;
  for (auto it = g.a.rbegin(); it != g.a.rend(); ++it) code = code * n + *it;
  return code;
}

/// Average number of fixed vectors. Throws when the elements are visibly not
/// a group: a sampled product outside the set or a non-integral average.
template <class Rng>
OrbitResult burnside_count(const std::vector<ModMatrix>& elements, long n, Rng& rng, long closure_samples = 2000) {
  if (elements.empty()) throw std::invalid_argument("burnside_count: empty group");
  const int m = elements.front().m;
  std::unordered_set<long> codes;
  for (const auto& g : elements) codes.insert(matrix_code(g, n));
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  for (long s = 0; s < closure_samples; ++s) {
    const auto& x = elements[pick(rng)];
    const auto& y = elements[pick(rng)];
    if (!codes.count(matrix_code(multiply(x, y, n), n))) {
      throw std::invalid_argument("burnside_count: input is not closed under multiplication");
    }
  }
  const long size = ipow(n, m);
  long fixed_total = 0;
  for (const auto& g : elements) {
    for (long code = 0; code < size; ++code) {
      auto v = decode(code, n, m);
      if (apply(g, v, n) == v) ++fixed_total;
    }
  }
  const auto order = static_cast<long>(elements.size());
  if (fixed_total % order != 0) throw std::invalid_argument("burnside_count: non-integral average, not a group");
  return {n, m, fixed_total / order, OrbitMethod::BurnsideFixedPoints, order, 0};
}

/// The subgroup generated by the given elements, by closure.
inline std::vector<ModMatrix> generated_subgroup(const std::vector<ModMatrix>& generators, long n, int m) {
  std::vector<ModMatrix> group{ModMatrix::identity(m)};
  std::unordered_set<long> codes{matrix_code(group.front(), n)};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& s : generators) {
      ModMatrix h = multiply(group[i], s, n);
      if (codes.insert(matrix_code(h, n)).second) group.push_back(h);
    }
  }
  return group;
}

}  // namespace jrl::towers
