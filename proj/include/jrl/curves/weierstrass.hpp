#pragma once

#include <array>

namespace jrl::curves {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over any commutative ring T.
template <class T>
struct WeierstrassCoefficients {
  T a1{0}, a2{0}, a3{0}, a4{0}, a6{0};

  T b2() const { return T(a1 * a1 + T(4) * a2); }
  T b4() const { return T(T(2) * a4 + a1 * a3); }
  T b6() const { return T(a3 * a3 + T(4) * a6); }
  T b8() const {
    return T(a1 * a1 * a6 + T(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4);
  }
  T c4() const {
    T x2 = b2();
    return T(x2 * x2 - T(24) * b4());
  }
  T c6() const {
    T x2 = b2(), x4 = b4();
    return T(T(0) - x2 * x2 * x2 + T(36) * x2 * x4 - T(216) * b6());
  }
  T discriminant() const {
    T x2 = b2(), x4 = b4(), x6 = b6(), x8 = b8();
    return T(T(0) - x2 * x2 * x8 - T(8) * x4 * x4 * x4 - T(27) * x6 * x6 + T(9) * x2 * x4 * x6);
  }

  std::array<T, 5> as_array() const { return {a1, a2, a3, a4, a6}; }
  static WeierstrassCoefficients from_array(const std::array<T, 5>& a) { return {a[0], a[1], a[2], a[3], a[4]}; }
};

/// Weight i of a_i under (x, y) -> (u^2 x, u^3 y).
inline constexpr std::array<int, 5> kWeierstrassWeights = {1, 2, 3, 4, 6};

}  // namespace jrl::curves
