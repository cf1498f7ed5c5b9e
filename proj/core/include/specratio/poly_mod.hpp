// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "specratio/poly.hpp"

namespace specratio {

// Dense polynomial over F_p, p a machine-word prime. Coefficients are
// residues in [0, p); the invariant mirrors Poly (empty = zero).
class PolyModP {
 public:
  explicit PolyModP(std::uint64_t p) : p_(p) {}
  PolyModP(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  std::uint64_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const;

  PolyModP derivative() const;
  PolyModP monic() const;
  Poly to_poly() const;  // lift with nonnegative residues

  friend bool operator==(const PolyModP&, const PolyModP&) = default;

 private:
  friend PolyModP operator+(const PolyModP&, const PolyModP&);
  friend PolyModP operator-(const PolyModP&, const PolyModP&);
  friend PolyModP operator*(const PolyModP&, const PolyModP&);
  void normalize();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

PolyModP operator+(const PolyModP& a, const PolyModP& b);
PolyModP operator-(const PolyModP& a, const PolyModP& b);
PolyModP operator*(const PolyModP& a, const PolyModP& b);

// Remainder and quotient; the divisor may be non-monic (p prime, so its
// leading coefficient is invertible).
struct DivRemModP {
  PolyModP quotient;
  PolyModP remainder;
};
DivRemModP divrem(const PolyModP& a, const PolyModP& b);
PolyModP gcd(const PolyModP& a, const PolyModP& b);  // monic

// base^e mod f, with an arbitrary-precision exponent.
PolyModP pow_mod(const PolyModP& base, const BigInt& e, const PolyModP& f);

// Coefficientwise reduction; verifies primality of p (deterministic
// Miller-Rabin over the full 64-bit range). Throws std::invalid_argument
// for non-prime p.
PolyModP reduce_mod_p(const Poly& f, std::uint64_t p);

struct ModFactor {
  PolyModP factor;  // monic irreducible
  int multiplicity;
};

// Complete factorization over F_p into monic irreducibles:
// lc(f) * prod factor^multiplicity == f. Distinct-degree splitting followed
// by equal-degree (Cantor-Zassenhaus; trace splitting for p = 2), with the
// internal PRNG seeded from the input, so results are deterministic.
// Factors are sorted by (degree, coefficients).
std::vector<ModFactor> factor_mod_p(const PolyModP& f);

bool is_irreducible_mod_p(const PolyModP& f);

}  // namespace specratio
