// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specratio/interval.hpp"
#include "specratio/matrix.hpp"
#include "specratio/poly.hpp"
#include "specratio/report.hpp"

namespace specratio {

// Built-in one-parameter families with slow spectral-ratio decay.
//   genus3     train-track family on a closed genus-3 surface, 9x9 matrix
//   s05        five-punctured-sphere braid family, quartic minimal polynomial
//   gl3        integer 3x3 family with charpoly x^3 - 2^k x - 1
//   quadratic  trace-t quadratic x^2 - t x + 1 (ratio floor phi^4)
enum class FamilyName { genus3, s05, gl3, quadratic };

std::string family_name_string(FamilyName name);
FamilyName parse_family_name(const std::string& text);  // invalid_argument

struct FamilyValidity {
  bool valid = false;
  std::string reason;  // empty when valid
};

// Parameter ranges under which each family's guarantees are proved:
//   genus3     k >= 7 and k = 2 (mod 8)
//   s05        k > 4 and 4k + 1 not a perfect square
//   gl3        k >= 1
//   quadratic  t >= 3
FamilyValidity family_validity(FamilyName name, long k);

// 9x9 transition matrix of the genus-3 family. Defined for k >= 2
// (Fibonacci indices stay positive); throws std::domain_error below that.
Mat genus3_matrix(long k);

// x^6 - F(2k) x^4 - F(2k+3) x^3 - F(2k) x^2 + 1, the dilatation factor.
Poly genus3_sextic(long k);

// (x^3 - 1) * genus3_sextic(k), the full characteristic polynomial.
Poly genus3_expected_charpoly(long k);

// Proved envelope for the genus-3 ratio: 1 < sigma <= both bounds below.
struct Genus3Bounds {
  Rational fib_bound;       // 1 + 6/F(k), exact
  RealEnclosure phi_bound;  // 1 + 14*phi^-k, certified enclosure
};
Genus3Bounds genus3_bounds(long k);  // domain_error when k is not valid

// Certified enclosure of the golden ratio (1 + sqrt 5)/2.
RealEnclosure golden_ratio(long bits = 96);

// Quartic x^4 - (2k+5) x^3 + (k^2+4k+8) x^2 - (2k+5) x + 1 for k >= 1.
Poly s05_minimal_poly(long k);

// Its palindromic reduction y^2 - (2k+5) y + (k^2+4k+6).
Poly s05_reduced_quadratic(long k);

// [[0,0,1],[1,0,2^k],[0,1,0]] for k >= 1.
Mat gl3_matrix(long k);

// x^3 - 2^k x - 1.
Poly gl3_expected_charpoly(long k);

// x^2 - t x + 1 for t >= 3; throws std::domain_error below (t = 2 gives a
// repeated root and no expansion).
Poly quadratic_floor_poly(long t);

// Full spectral report for quadratic_floor_poly(t). The ratio equals
// lambda^2 and is certified to sit at or above phi^4 = 6.8541...
SpectralReport quadratic_floor(long t);

// One sampled family member, ready for verification or regression.
struct FamilyInstance {
  FamilyName name = FamilyName::gl3;
  long k = 0;
  bool valid = false;
  std::string invalid_reason;
  std::optional<Mat> matrix;         // absent for s05 (polynomial family)
  std::optional<Poly> minimal_poly;  // expected minimal poly of the dilatation
  std::string bound_description;
  double bound_value = 0.0;  // numeric upper envelope for sigma, 0 if none
  long word_length = 0;      // mapping-class word length used in regressions
};

// Builds the instance even when the parameter fails the validity predicate
// (valid=false and the reason recorded), as long as the raw constructors
// are defined; throws std::domain_error otherwise.
FamilyInstance make_instance(FamilyName name, long k);
std::vector<FamilyInstance> make_instances(FamilyName name,
                                           const std::vector<long>& ks);

// "10" -> {10};  "10,18,26" -> {10,18,26};  "5..9" -> {5,6,7,8,9}.
std::vector<long> parse_k_list(const std::string& text);

// Convergence-behavior catalog over small surfaces, indexed by genus and
// puncture count. Status codes:
//   N   no pseudo-Anosov maps exist
//   B   spectral ratios stay bounded away from one
//   P<= some family has sigma - 1 <= 1/poly(word length)
//   E   some family has sigma - 1 <= 1/exp(word length)
struct CatalogEntry {
  int genus = 0;
  int punctures = 0;
  std::string status;
  std::string family;  // built-in family realizing the bound, when present
  std::string word;    // mapping-class word witnessing the status
  std::string note;
};

// All cells with genus 0..3 and punctures 0..7, row-major.
const std::vector<CatalogEntry>& behavior_catalog();

// Status code of one cell; throws std::out_of_range outside the table.
std::string catalog_status(int genus, int punctures);

}  // namespace specratio
