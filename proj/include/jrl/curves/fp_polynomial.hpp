#pragma once

#include <utility>
#include <vector>

#include "jrl/arith/prime_field.hpp"

namespace jrl::curves {

/// Small dense polynomial over F_p, only what the singularity tests need.
class FpPolynomial {
 public:
  using Element = arith::PrimeField::Element;

  FpPolynomial(const arith::PrimeField& F, std::vector<Element> ascending) : F_(F), c_(std::move(ascending)) {
    trim();
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  FpPolynomial derivative() const {
    std::vector<Element> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(F_.mul(F_.from_int(static_cast<long>(i)), c_[i]));
    return {F_, std::move(d)};
  }

  friend FpPolynomial remainder(FpPolynomial a, const FpPolynomial& b) {
    const auto& F = a.F_;
    const Element inv = F.inv(b.c_.back());
    while (a.degree() >= b.degree()) {
      Element q = F.mul(a.c_.back(), inv);
      const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
      for (std::size_t j = 0; j < b.c_.size(); ++j) a.c_[shift + j] = F.sub(a.c_[shift + j], F.mul(q, b.c_[j]));
      a.trim();
      if (a.is_zero()) break;
    }
    return a;
  }

  friend FpPolynomial gcd(FpPolynomial a, FpPolynomial b) {
    while (!b.is_zero()) {
      FpPolynomial r = remainder(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  arith::PrimeField F_;
  std::vector<Element> c_;
};

}  // namespace jrl::curves
