#pragma once

#include <stdexcept>
#include <vector>

#include "coxcat/bigint.hpp"
#include "coxcat/qt_rational.hpp"

namespace coxcat::linalg {

inline bool entry_is_zero(const Rat& x) { return x == 0; }
inline bool entry_is_zero(const QT& x) { return x.is_zero(); }

/// Gauss-Jordan inverse over an exact field (Rat or QT).
template <class F>
std::vector<std::vector<F>> invert(std::vector<std::vector<F>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<F>> inv(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = F(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && entry_is_zero(a[piv][col])) ++piv;
    if (piv == n) throw std::logic_error("singular matrix in exact inverse");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    F d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] / d;
      inv[col][j] = inv[col][j] / d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || entry_is_zero(a[i][col])) continue;
      F f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = a[i][j] - f * a[col][j];
        inv[i][j] = inv[i][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace coxcat::linalg
