// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "specratio/numeric.hpp"

namespace specratio {

// Dense univariate polynomial over the integers, coefficients ascending
// (index i = coefficient of x^i). Invariant: empty vector for the zero
// polynomial, otherwise the last coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly zero() { return Poly(); }
  static Poly constant(BigInt c);
  static Poly monomial(BigInt c, std::size_t power);
  static Poly identity_x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  // Coefficient of x^i; zero beyond the degree.
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;

  Poly derivative() const;
  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  // Sign of eval at a rational point without building large rationals.
  int sign_at(const Rational& x) const;

  Poly shifted(const BigInt& a) const;   // f(x + a)
  Poly reflected() const;                // f(-x)
  Poly reversed() const;                 // x^deg * f(1/x)
  Poly pow(unsigned e) const;

  BigInt max_abs_coeff() const;
  BigInt l2_norm_squared() const;

  std::string to_string() const;  // e.g. "x^3 - 16x - 1"

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

Poly operator-(const Poly& a);
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const BigInt& c, const Poly& a);

// Division with remainder. When b is monic (or the division happens to be
// exact over the integers) scale == 1 and a = quotient*b + remainder.
// Otherwise the pseudo-division identity scale*a = quotient*b + remainder
// holds, with scale a power of leading(b) and pseudo == true.
struct DivRem {
  Poly quotient;
  Poly remainder;
  BigInt scale;
  bool pseudo;
};
DivRem divrem(const Poly& a, const Poly& b);

// Quotient of an exact division; throws std::domain_error if b does not
// divide a over the integers.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);

// f = content * primitive with primitive having positive leading
// coefficient and coprime coefficients; content carries the sign of the
// leading coefficient so the reconstruction is exact.
struct ContentPrimitive {
  BigInt content;
  Poly primitive;
};
ContentPrimitive content_primitive(const Poly& f);

// Integer-polynomial gcd (primitive pseudo-remainder sequence), normalized
// to positive leading coefficient; gcd of contents included.
Poly gcd(const Poly& a, const Poly& b);

bool is_squarefree(const Poly& f);

BigInt resultant(const Poly& a, const Poly& b);
BigInt discriminant(const Poly& f);

// Parses an ascending comma-separated coefficient list, e.g. "1,-3,1".
Poly parse_poly_csv(const std::string& text);
std::string poly_to_csv(const Poly& f);

// Stable 64-bit hash of the coefficient sequence (PRNG seeding).
std::uint64_t poly_hash(const Poly& f);

}  // namespace specratio
