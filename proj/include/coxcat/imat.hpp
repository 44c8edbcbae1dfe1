#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "coxcat/bigint.hpp"

namespace coxcat {

// Small square integer matrix (row-major). Entries stay tiny for Weyl group
// elements, so plain int64 arithmetic is safe.
struct IMat {
  int n = 0;
  std::vector<std::int64_t> a;

  IMat() = default;
  explicit IMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}

  static IMat identity(int dim) {
    IMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  std::int64_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  bool operator==(const IMat& o) const { return n == o.n && a == o.a; }
  bool operator!=(const IMat& o) const { return !(*this == o); }
  bool operator<(const IMat& o) const { return a < o.a; }

  IMat mul(const IMat& o) const {
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    IMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const std::int64_t x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < n; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector dimension mismatch");
    std::vector<std::int64_t> r(v.size(), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }
};

struct IMatHash {
  std::size_t operator()(const IMat& m) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (auto x : m.a) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Exact determinant via Bareiss fraction-free elimination.
inline Int det(const IMat& m) {
  const int n = m.n;
  std::vector<Int> w(m.a.begin(), m.a.end());
  auto at = [&](int i, int j) -> Int& { return w[static_cast<std::size_t>(i) * n + j]; };
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = exact_div(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
    prev = at(k, k);
  }
  return n == 0 ? Int(1) : sign * at(n - 1, n - 1);
}

}  // namespace coxcat
