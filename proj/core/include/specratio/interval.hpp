// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specratio/numeric.hpp"

namespace specratio {

// Closed rational interval [lo, hi]; the basic certified-value carrier.
// All operations are exact, so enclosures never silently lose containment.
struct RealEnclosure {
  Rational lo;
  Rational hi;

  RealEnclosure() : lo(0), hi(0) {}
  RealEnclosure(Rational point) : lo(point), hi(point) {}
  RealEnclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("inverted enclosure");
  }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return contains(Rational(0)); }
  // Sign is defined only when the interval does not straddle zero.
  int sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
  }
};

inline RealEnclosure operator-(const RealEnclosure& a) {
  return RealEnclosure(-a.hi, -a.lo);
}

inline RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b) {
  return RealEnclosure(a.lo + b.lo, a.hi + b.hi);
}

inline RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b) {
  return RealEnclosure(a.lo - b.hi, a.hi - b.lo);
}

inline RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
           p4 = a.hi * b.hi;
  return RealEnclosure(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

inline RealEnclosure reciprocal(const RealEnclosure& a) {
  if (a.contains_zero()) throw std::domain_error("reciprocal of enclosure containing zero");
  return RealEnclosure(1 / a.hi, 1 / a.lo);
}

inline RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b) {
  return a * reciprocal(b);
}

inline RealEnclosure abs_enclosure(const RealEnclosure& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return -a;
  return RealEnclosure(Rational(0), std::max(Rational(-a.lo), a.hi));
}

inline RealEnclosure sqrt_enclosure(const RealEnclosure& a, long bits) {
  if (a.lo < 0) throw std::domain_error("sqrt of enclosure reaching below zero");
  return RealEnclosure(sqrt_bounds(a.lo, bits).lo, sqrt_bounds(a.hi, bits).hi);
}

// Tightest representable double pair [value, radius] covering the interval;
// the conversion slack is absorbed into the radius.
struct CertifiedValue {
  double value = 0.0;
  double radius = 0.0;
};

inline CertifiedValue to_certified(const RealEnclosure& a) {
  CertifiedValue out;
  out.value = to_double(a.mid());
  double half = to_double(a.width() / 2);
  // mpq -> double conversion truncates; pad by a few ulps of the endpoints.
  double pad = 4e-16 * (std::abs(to_double(a.lo)) + std::abs(to_double(a.hi))) +
               5e-324;
  out.radius = half + pad;
  return out;
}

}  // namespace specratio
