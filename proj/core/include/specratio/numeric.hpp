// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace specratio {

// Arbitrary-precision integers and rationals. Rationals are kept in
// canonical form (coprime numerator/denominator, positive denominator)
// by the underlying GMP layer.
using BigInt = mpz_class;
using Rational = mpq_class;

// F(0) = 0, F(1) = F(2) = 1.
BigInt fibonacci(unsigned long n);

// Number of bits of |v|; 0 for v == 0.
long bit_length(const BigInt& v);

// log2(|v|) for v != 0, accurate to double precision.
double log2_abs(const BigInt& v);
double log2_abs(const Rational& v);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Nearest dyadic number a/2^s with |result - v| <= 2^-bits * |v|.
Rational round_to_bits(const Rational& v, long bits);

// Enclosure lo <= sqrt(q) <= hi with hi - lo <= 2^-bits * max(sqrt(q), 1).
// Requires q >= 0; exact when q is a perfect square of a rational.
struct SqrtBounds {
  Rational lo;
  Rational hi;
};
SqrtBounds sqrt_bounds(const Rational& q, long bits);

// Floor/ceil of sqrt on nonnegative integers.
BigInt isqrt_floor(const BigInt& n);
BigInt isqrt_ceil(const BigInt& n);
bool is_perfect_square(const BigInt& n);

// SplitMix64 step; the standard finalizer of Steele, Lea and Flood.
std::uint64_t splitmix64(std::uint64_t& state);

// Stateless mix used to derive independent per-record seeds from a base
// seed and a record index.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

// Decimal conversions. parse_bigint accepts an optional leading '-';
// throws std::invalid_argument on malformed input.
BigInt parse_bigint(const std::string& text);
std::string to_decimal(const BigInt& v);

// Shorthand used when narrowing exact values for reports.
double to_double(const Rational& v);

}  // namespace specratio
