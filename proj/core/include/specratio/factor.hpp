// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specratio/poly.hpp"

namespace specratio {

// Evidence for the irreducibility of a factor over Z:
//   degree_le_1    trivially irreducible;
//   mod_p          the factor stays irreducible modulo the recorded prime;
//   recombination  subset recombination over the Hensel-lifted modular
//                  factors exhausted every proper split.
enum class CertificateKind { degree_le_1, mod_p, recombination };

struct IrreducibilityCertificate {
  CertificateKind kind = CertificateKind::recombination;
  std::uint64_t prime = 0;  // meaningful when kind == mod_p
};

std::string certificate_kind_name(CertificateKind k);

struct FactorPart {
  Poly factor;  // primitive, positive leading coefficient, irreducible
  int multiplicity = 1;
  IrreducibilityCertificate certificate;
};

// Audit trail for one squarefree piece that required Hensel lifting: the
// lift ran to prime^exponent = modulus > 2 * coefficient_bound, where
// coefficient_bound is the Landau-Mignotte value 2^deg(h) * ceil(|h|_2)
// for the monicized piece h.
struct LiftingReport {
  Poly squarefree_input;
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  BigInt modulus;
  BigInt coefficient_bound;
};

struct Factorization {
  BigInt content;
  std::vector<FactorPart> factors;  // sorted by (degree, coefficients)
  std::vector<LiftingReport> liftings;
};

// content * prod factor^multiplicity; equals the factored input exactly.
Poly reconstruct(const Factorization& fz);

// Yun square-free decomposition; the product of part^multiplicity
// reconstructs f divided by its (signed) content. Parts are primitive with
// positive leading coefficient, pairwise coprime, listed by ascending
// multiplicity. Throws std::domain_error on the zero polynomial.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f);

// Complete factorization into Z-irreducibles: squarefree split, good-prime
// selection (smallest p >= 3 not dividing lc * disc of the piece), mod-p
// factorization, quadratic Hensel lifting past the Landau-Mignotte bound,
// and subset recombination. Deterministic. Throws std::domain_error on the
// zero polynomial.
Factorization factor_over_z(const Poly& f);

// True iff f mod p is irreducible over F_p (which certifies irreducibility
// over Q). Requires p prime (std::invalid_argument otherwise) and
// deg(f mod p) == deg f (std::domain_error on degree drop).
bool irreducible_mod_p_certificate(const Poly& f, std::uint64_t p);

// The unique irreducible factor of f owning the maximum-modulus root.
// Throws std::domain_error when f has no roots or when the dominant root
// is not unique at certification precision (exact ties included).
Poly minimal_poly_of_dominant_root(const Poly& f);

}  // namespace specratio
