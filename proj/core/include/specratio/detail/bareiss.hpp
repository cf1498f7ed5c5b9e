// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace specratio::detail {

// Fraction-free determinant (Bareiss). Works over any integral domain given
// ring traits with: zero(), is_zero(e), mul(a,b), sub(a,b), exact_div(a,b).
// All intermediate divisions are exact by construction.
template <typename Ring, typename Traits>
Ring bareiss_det(std::vector<std::vector<Ring>> m, const Traits& t) {
  const std::size_t n = m.size();
  if (n == 0) return t.one();
  bool negate = false;
  Ring prev = t.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (t.is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && t.is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return t.zero();
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring num = t.sub(t.mul(m[k][k], m[i][j]), t.mul(m[i][k], m[k][j]));
        m[i][j] = t.exact_div(std::move(num), prev);
      }
      m[i][k] = t.zero();
    }
    prev = m[k][k];
  }
  Ring det = m[n - 1][n - 1];
  return negate ? t.sub(t.zero(), det) : det;
}

}  // namespace specratio::detail
