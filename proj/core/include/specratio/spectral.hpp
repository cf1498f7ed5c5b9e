// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "specratio/families.hpp"
#include "specratio/interval.hpp"
#include "specratio/matrix.hpp"
#include "specratio/poly.hpp"
#include "specratio/report.hpp"
#include "specratio/roots.hpp"

namespace specratio {

// Height of the polynomial in bits: log2 of the largest |coefficient|.
// Measured on f as given (callers pass primitive minimal polynomials).
// Throws std::domain_error for the zero polynomial.
HeightValue height_of_poly(const Poly& f);

// A priori bit bounds for heights under field operations:
//   sum      h1 + h2 + 1
//   product  h1 + h2
//   inverse  h1          (unary)
enum class HeightOp { sum, product, inverse };

std::string height_op_name(HeightOp op);
double height_bound(HeightOp op, double h1);             // inverse only
double height_bound(HeightOp op, double h1, double h2);  // sum / product

// Integer polynomial R with R(r_i/r_j) = 0 for all ordered pairs of roots
// of mu, computed as Res_x(mu(x), mu(z*x)) with integer content removed.
// deg R = (deg mu)^2. Requires mu squarefree with nonzero constant term
// (a zero root makes ratios undefined); throws std::invalid_argument.
Poly ratio_resultant(const Poly& mu);

// Integer polynomial vanishing on all pairwise sums (resp. products) of
// roots of f and g, via resultants; degree = deg f * deg g. Requires f, g
// squarefree of degree >= 1; throws std::invalid_argument otherwise.
enum class ComposeOp { sum, product };
Poly composed_poly(ComposeOp op, const Poly& f, const Poly& g);

// Liouville-style floor check for a certified nonzero real algebraic
// number alpha with irreducible minimal polynomial alpha_poly:
//   -log2|alpha| <= height(alpha) + deg(alpha).
// neg_log2_alpha is the certified upper bound used on the left-hand side.
struct LemmaReport {
  double neg_log2_alpha = 0.0;
  double height_plus_degree = 0.0;
  bool holds = false;
  Poly alpha_poly;
};
LemmaReport lemma_check(const Poly& alpha_poly,
                        const RealEnclosure& alpha_value);

// Full pipeline for a polynomial: factor, isolate the dominant root's
// irreducible factor, certify |lambda_1|, |lambda_2| and their ratio.
// Throws std::domain_error when the dominant modulus is attained by more
// than one irreducible factor or by a conjugate pair (genuine tie).
// A degree-1 minimal polynomial is reported with ratio_defined = false.
SpectralReport spectral_report_of_poly(const Poly& f,
                                       long bits = kDefaultPrecisionBits);

// Same report for the characteristic polynomial of an integer matrix.
SpectralReport spectral_ratio_of_matrix(const Mat& m,
                                        long bits = kDefaultPrecisionBits);

// Minimal polynomial and certified enclosure of the gap sigma - 1 for the
// spectral ratio of mu, extracted from the factored ratio resultant.
// Requires the ratio of mu to be certified strict.
struct GapWitness {
  Poly minimal_poly;
  RealEnclosure value;
};
GapWitness ratio_gap_witness(const Poly& mu, long bits = 128);

// One data point of the slow-convergence regression.
struct ExperimentPoint {
  std::string family;
  long k = 0;
  long word_length = 0;
  double sigma = 0.0;         // midpoint of the certified ratio enclosure
  double neg_log2_gap = 0.0;  // -log2(sigma - 1), exact rational log
};

struct RegressionLine {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> residuals;
};

// Fits -log2(sigma - 1) against both the family parameter k and the
// mapping-class word length. A slope bounded by a constant in the word
// length is the observable form of the universal lower bound: the gap
// cannot shrink faster than exponentially in |word|.
struct ExperimentReport {
  std::vector<ExperimentPoint> points;
  RegressionLine vs_k;
  RegressionLine vs_word_length;
  int skipped_invalid = 0;
};

// Throws std::invalid_argument when fewer than 3 valid instances remain.
ExperimentReport lower_bound_experiment(
    const std::vector<FamilyInstance>& instances);

}  // namespace specratio
