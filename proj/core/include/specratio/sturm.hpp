// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "specratio/interval.hpp"
#include "specratio/poly.hpp"

namespace specratio {

// Interval (lo, hi] containing exactly one real root of the target
// polynomial, together with the Sturm variation counts at the endpoints.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int variations_lo = 0;
  int variations_hi = 0;
};

// Sturm chain of a squarefree integer polynomial. Variation counts ignore
// zero entries, which makes V right-continuous: V(a) - V(b) is exactly the
// number of roots in the half-open interval (a, b].
class SturmChain {
 public:
  explicit SturmChain(const Poly& f);

  const Poly& poly() const { return f_; }
  int variations_at(const Rational& x) const;
  int count_in(const Rational& lo, const Rational& hi) const;
  int count_real_roots() const;

 private:
  Poly f_;
  std::vector<Poly> chain_;
};

// Strict bound: every complex root r of f satisfies |r| < bound.
Rational cauchy_root_bound(const Poly& f);

// Disjoint intervals, one per real root, covering all real roots of f.
// Throws std::invalid_argument when f is zero or not squarefree.
std::vector<IsolatingInterval> isolate_real_roots(const Poly& f);

// Bisects until hi - lo <= max_width, preserving the single-root invariant.
void refine_to_width(const SturmChain& chain, IsolatingInterval& iv,
                     const Rational& max_width);

// Isolation + refinement in one call.
std::vector<IsolatingInterval> isolate_real_roots_refined(
    const Poly& f, const Rational& max_width);

}  // namespace specratio
