// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "specratio/interval.hpp"
#include "specratio/poly.hpp"

namespace specratio {

inline constexpr long kDefaultPrecisionBits = 64;

// Certified complex root: the closed disk |z - (re + i*im)| <= radius
// contains exactly one root of the (squarefree part of the) polynomial,
// of the stated multiplicity. is_real is certified, not guessed.
struct RootDisk {
  Rational re;
  Rational im;
  Rational radius;
  int multiplicity = 1;
  bool is_real = false;
};

// Certified enclosure of the modulus |root| for a disk.
RealEnclosure modulus_enclosure(const RootDisk& d);

struct RootSet {
  Poly poly;
  std::vector<RootDisk> roots;  // sorted by modulus, largest first
  long precision_bits = 0;      // requested relative precision
  long achieved_bits = 0;       // worst certified relative precision
  bool precision_met = false;
};

// All complex roots with certified radii <= 2^-precision_bits * |root|
// (relative). Multiplicities come from the squarefree decomposition;
// disks of distinct roots are pairwise disjoint and reality is certified
// by matching against the exact Sturm real-root count. If the precision
// target cannot be met within the escalation budget, the best achieved
// radii are returned with precision_met = false.
RootSet all_roots(const Poly& f, long precision_bits = kDefaultPrecisionBits);

// For palindromic p of even degree 2m, the unique q of degree m with
// p(x) = x^m * q(x + 1/x) exactly. Throws std::invalid_argument when p is
// not palindromic or has odd degree.
Poly palindromic_reduce(const Poly& p);

// The two solutions of x + 1/x = y for a certified real y: a real pair
// when |y| >= 2, a conjugate pair re +- i*im when |y| < 2 (then |x| = 1).
// Throws std::invalid_argument if the enclosure of y^2 - 4 straddles zero.
struct LiftedRoots {
  bool real = true;
  RealEnclosure plus;    // (y + sqrt(y^2-4))/2          (real case)
  RealEnclosure minus;   // (y - sqrt(y^2-4))/2          (real case)
  RealEnclosure re;      // y/2                          (complex case)
  RealEnclosure im_abs;  // sqrt(4-y^2)/2                (complex case)
};
LiftedRoots lift_palindromic_roots(const RealEnclosure& y,
                                   long bits = kDefaultPrecisionBits);

// Outcome of a spectral-ratio computation on a polynomial.
enum class RatioStatus {
  strict,            // unique dominant root, certified enclosure
  tie_equal_modulus, // |lambda_1| = |lambda_2| exactly, ratio = 1
  unresolved,        // could not separate within budget; ratio in [1, hi]
};

struct RatioResult {
  RatioStatus status = RatioStatus::unresolved;
  RealEnclosure ratio;          // enclosure of |lambda_1/lambda_2|
  RootSet roots;                // roots of the zero-deflated polynomial
  int zero_root_multiplicity = 0;
};

// Certified |lambda_1/lambda_2| of the nonzero roots of f, widened until
// the dominant root is certifiably of strictly maximal modulus or an exact
// tie is established. Throws std::domain_error when fewer than two nonzero
// roots remain (ratio undefined).
RatioResult spectral_ratio_of_poly(const Poly& f,
                                   long bits = kDefaultPrecisionBits);

// Closed-form (trigonometric) roots of a cubic with three real roots;
// floating initializer / cross-check only, never a certificate.
std::vector<double> viete_cubic_roots(const Poly& cubic);

}  // namespace specratio
