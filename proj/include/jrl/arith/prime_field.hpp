#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jrl/arith/prime.hpp"

namespace jrl::arith {

/// Integers modulo a prime p. Elements are plain residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
  }

  std::uint64_t modulus() const { return p_; }

  Element from_int(std::int64_t a) const {
    auto sp = static_cast<std::int64_t>(p_);
    std::int64_t r = a % sp;
    return static_cast<Element>(r < 0 ? r + sp : r);
  }

  Element from_integer(const mpz_class& a) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p_);
    return r.get_ui();
  }

  /// Throws std::domain_error when p divides the denominator.
  Element from_rational(const mpq_class& q) const {
    Element den = from_integer(q.get_den());
    if (den == 0) {
      throw std::domain_error("rational with denominator divisible by " + std::to_string(p_));
    }
    return mul(from_integer(q.get_num()), inv(den));
  }

  bool reducible(const mpq_class& q) const { return from_integer(q.get_den()) != 0; }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return mulmod(a, b, p_); }
  Element pow(Element a, std::uint64_t e) const { return powmod(a, e, p_); }

  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return powmod(a, p_ - 2, p_);
  }

  /// Quadratic character of a residue, via Euler's criterion.
  int chi(Element a) const {
    if (a == 0) return 0;
    if (p_ == 2) return 1;
    return powmod(a, (p_ - 1) / 2, p_) == 1 ? 1 : -1;
  }

  /// chi for every residue, for inner loops.
  std::vector<std::int8_t> character_table() const {
    std::vector<std::int8_t> table(p_, -1);
    table[0] = 0;
    for (std::uint64_t x = 1; x <= p_ / 2 || (p_ == 2 && x < 2); ++x) table[mulmod(x, x, p_)] = 1;
    return table;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace jrl::arith
