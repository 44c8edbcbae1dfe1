#pragma once

#include <algorithm>
#include <vector>

#include "coxcat/bigint.hpp"
#include "coxcat/imat.hpp"

namespace coxcat {

/// Elementary divisors of an integer matrix via Smith normal form.
///
/// Returns the diagonal d_1 | d_2 | ... | d_n of the Smith form, all entries
/// nonnegative, with any zero divisors placed last. Row/column operations are
/// unimodular throughout, so the result is the canonical divisor chain.
inline std::vector<Int> smith_elementary_divisors(const IMat& m) {
  const int n = m.n;
  std::vector<Int> w(m.a.begin(), m.a.end());
  auto at = [&](int i, int j) -> Int& { return w[static_cast<std::size_t>(i) * n + j]; };

  auto row_sub = [&](int dst, int src, const Int& c, int from) {
    for (int j = from; j < n; ++j) at(dst, j) -= c * at(src, j);
  };
  auto col_sub = [&](int dst, int src, const Int& c, int from) {
    for (int i = from; i < n; ++i) at(i, dst) -= c * at(i, src);
  };

  std::vector<Int> divisors;
  for (int s = 0; s < n; ++s) {
    // Locate a nonzero pivot of minimal absolute value in the trailing block.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = s; i < n; ++i)
      for (int j = s; j < n; ++j) {
        Int v = abs(at(i, j));
        if (v != 0 && (pi < 0 || v < best)) { best = v; pi = i; pj = j; }
      }
    if (pi < 0) {
      for (int k = s; k < n; ++k) divisors.push_back(0);
      break;
    }
    if (pi != s)
      for (int j = s; j < n; ++j) std::swap(at(s, j), at(pi, j));
    if (pj != s)
      for (int i = s; i < n; ++i) std::swap(at(i, s), at(i, pj));

    bool again = true;
    while (again) {
      again = false;
      for (int i = s + 1; i < n; ++i) {
        if (at(i, s) == 0) continue;
        Int q = at(i, s) / at(s, s);
        row_sub(i, s, q, s);
        if (at(i, s) != 0) {
          for (int j = s; j < n; ++j) std::swap(at(s, j), at(i, j));
          again = true;
        }
      }
      for (int j = s + 1; j < n; ++j) {
        if (at(s, j) == 0) continue;
        Int q = at(s, j) / at(s, s);
        col_sub(j, s, q, s);
        if (at(s, j) != 0) {
          for (int i = s; i < n; ++i) std::swap(at(i, s), at(i, j));
          again = true;
        }
      }
      if (!again) {
        // Pivot must divide every remaining entry; if not, fold the offender in.
        for (int i = s + 1; i < n && !again; ++i)
          for (int j = s + 1; j < n && !again; ++j)
            if (at(i, j) % at(s, s) != 0) {
              for (int k = s; k < n; ++k) at(s, k) += at(i, k);
              again = true;
            }
      }
    }
    divisors.push_back(abs(at(s, s)));
  }
  std::stable_partition(divisors.begin(), divisors.end(), [](const Int& d) { return d != 0; });
  return divisors;
}

}  // namespace coxcat
