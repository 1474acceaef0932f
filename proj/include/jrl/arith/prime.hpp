#pragma once

// Primality, prime enumeration and the quadratic character.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jrl::arith {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin. The first thirteen primes as witnesses are
// exact for every n < 3.3e24, which covers the whole 64-bit range.
inline bool is_prime(std::uint64_t n) {
  constexpr std::uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  if (n < 2) return false;
  for (std::uint64_t w : witnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t w : witnesses) {
    std::uint64_t x = powmod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// All primes in [lo, hi], ascending. Segmented sieve over the interval.
inline std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) {
    throw std::invalid_argument("primes_in_range: lo > hi (" + std::to_string(lo) + " > " +
                                std::to_string(hi) + ")");
  }
  if (lo < 2) lo = 2;
  std::vector<std::uint64_t> out;
  if (lo > hi) return out;

  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(hi)));
  while (root * root > hi) --root;
  while ((root + 1) * (root + 1) <= hi) ++root;

  std::vector<bool> small(root + 1, true);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
  }

  constexpr std::uint64_t kSegment = 1U << 18U;
  for (std::uint64_t start = lo; start <= hi; start += kSegment) {
    std::uint64_t stop = std::min(hi, start + kSegment - 1);
    std::vector<bool> mark(stop - start + 1, true);
    for (std::uint64_t q : base) {
      std::uint64_t first = std::max(q * q, (start + q - 1) / q * q);
      for (std::uint64_t j = first; j <= stop; j += q) mark[j - start] = false;
    }
    for (std::uint64_t i = 0; i < mark.size(); ++i) {
      if (mark[i]) out.push_back(start + i);
    }
    if (stop == hi) break;
  }
  return out;
}

/// Legendre symbol (a/p) via Euler's criterion.
inline int legendre_symbol(std::int64_t a, std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("legendre_symbol: modulus must be an odd prime, got " +
                                std::to_string(p));
  }
  auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = a % sp;
  if (r < 0) r += sp;
  if (r == 0) return 0;
  std::uint64_t e = powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

}  // namespace jrl::arith
