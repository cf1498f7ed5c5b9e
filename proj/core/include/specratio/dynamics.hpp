// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specratio/matrix.hpp"

namespace specratio {

// Point of real projective space, stored as an L1-normalized coordinate
// vector with a canonical sign (the entry of largest magnitude is
// positive). Total-variation distance between rays is half the L1 norm of
// the difference of representatives.
struct Ray {
  std::vector<double> coords;
};

// Normalizes and canonicalizes; throws std::invalid_argument on the zero
// (or empty) vector.
Ray make_ray(std::vector<double> v);

// Evenly spread starting ray (all coordinates equal).
Ray uniform_ray(std::size_t dimension);

double ray_distance(const Ray& a, const Ray& b);

// Orbit v, mv, m^2 v, ... in projective space, with distances measured
// against the final iterate.
struct IterationTrace {
  Ray start;
  Ray limit;                      // last iterate, canonicalized
  std::vector<double> distances;  // d(m^n v, limit) for n = 0..steps
  int steps = 0;
  bool converged = false;   // successive distance fell below 1e-12
  int transient_steps = -1; // first n with d_n < d_0 / 10, -1 if never
  double fitted_rate = 0.0; // 2^slope of log2 d_n vs n; NaN if not estimable
};

// Runs exactly `steps` projective iterations (doubles; entries of m are
// narrowed once). Throws std::invalid_argument on dimension mismatch or
// steps < 1. Non-convergence is reported via the flag, not an error.
IterationTrace project_iterate(const Mat& m, const Ray& v0, int steps);

// Fitted per-step contraction factor: 2^(least-squares slope of log2 d_n
// against n), using post-transient points above the 1e-13 noise floor.
// Throws std::domain_error when fewer than 10 usable points remain.
double estimate_rate(const IterationTrace& trace);

// Certifies north-south behavior of a primitive nonnegative matrix: every
// sampled start converges to one attracting ray, which is an eigenvector.
struct NorthSouthReport {
  int trials = 0;
  int power_checked = 0;          // power at which positivity was observed
  double max_limit_spread = 0.0;  // max pairwise distance between limits
  double eigen_residual = 0.0;    // ||m v - lambda v||_1 for the limit v
  double lambda = 0.0;            // ||m v||_1, the dominant eigenvalue
  Ray limit;
  bool pass = false;
};

// Throws std::domain_error when m is not primitive (some entry of m^e is
// still zero at the Wielandt exponent e = n^2 - 2n + 2; the identity
// matrix fails this way) or not nonnegative.
NorthSouthReport north_south_check(const Mat& m, int trials = 10,
                                   std::uint64_t seed = 0x5eed0001u,
                                   int steps = 800, double tolerance = 1e-6);

// One sampled random word and its spectral data. Skipped samples keep the
// reason and leave the numeric fields NaN; they are never dropped.
struct SampleRecord {
  std::uint64_t seed = 0;  // per-record seed derived from the base seed
  int length = 0;
  std::string word;
  double dilatation = 0.0;
  double spectral_ratio = 0.0;
  double log_ratio = 0.0;  // log(lambda_1) / log(|lambda_2|)
  std::string skipped_reason;  // empty when the record is usable
  bool skipped() const { return !skipped_reason.empty(); }
};

// Uniform random words of each requested length over the generator set
// (letters drawn independently; record i uses mix_seed(base_seed, i) with
// i counting across the whole run). A word is skipped when its dominant
// eigenvalue is not certifiably a simple positive real with a defined,
// resolvable ratio. Throws std::invalid_argument for an empty generator
// set, empty length list, length < 1, or count < 1.
std::vector<SampleRecord> sample_words(const GeneratorSet& gens,
                                       const std::vector<int>& lengths,
                                       int count, std::uint64_t base_seed);

// Five-number summary (type-7 quantiles) of the usable spectral ratios,
// one row per distinct length, ascending.
struct LengthSummary {
  int length = 0;
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
  int samples = 0;  // usable records
  int skipped = 0;
};
std::vector<LengthSummary> summarize_samples(
    const std::vector<SampleRecord>& records);

// Deterministic CSV renderings (doubles via %.17g, empty cells for
// skipped records' numeric fields).
std::string records_csv(const std::vector<SampleRecord>& records);
std::string summaries_csv(const std::vector<LengthSummary>& rows);
std::string trace_csv(const IterationTrace& trace);

}  // namespace specratio
