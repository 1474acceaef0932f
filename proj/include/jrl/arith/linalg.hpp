#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "jrl/arith/polynomial.hpp"

namespace jrl::arith {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Determinant over a field by Gaussian elimination.
template <class T>
T determinant(Matrix<T> a) {
  const std::size_t n = a.size();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == T(0)) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = T(-det);
    }
    det = T(det * a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == T(0)) continue;
      T factor = T(a[r][col] / a[col][col]);
      for (std::size_t c = col; c < n; ++c) a[r][c] = T(a[r][c] - factor * a[col][c]);
    }
  }
  return det;
}

/// Sylvester matrix of f (deg m) and g (deg n): n shifted rows of f, then m of g.
template <class T>
Matrix<T> sylvester_matrix(const Polynomial<T>& f, const Polynomial<T>& g) {
  const int m = f.degree(), n = g.degree();
  const auto size = static_cast<std::size_t>(m + n);
  Matrix<T> s(size, std::vector<T>(size, T(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(static_cast<std::size_t>(m - i));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(static_cast<std::size_t>(n - i));
  return s;
}

template <class T>
T resultant(const Polynomial<T>& f, const Polynomial<T>& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return T(0);
  if (f.degree() == 0 && g.degree() == 0) return T(1);
  return determinant(sylvester_matrix(f, g));
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
template <class T>
T discriminant(const Polynomial<T>& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("discriminant of a constant polynomial");
  if (n == 1) return T(1);
  T r = resultant(f, f.derivative());
  r = T(r / f.leading());
  if ((n * (n - 1) / 2) % 2 == 1) r = T(-r);
  return r;
}

}  // namespace jrl::arith
