// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "specratio/factor.hpp"
#include "specratio/numeric.hpp"
#include "specratio/roots.hpp"

namespace specratio {

namespace {

constexpr double kNoiseFloor = 1e-13;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> narrow_matrix(const Mat& m) {
  const std::size_t n = m.dim();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i * n + j] = m.at(i, j).get_d();
    }
  }
  return out;
}

void canonicalize(std::vector<double>& v) {
  double norm = 0.0;
  std::size_t lead = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    norm += std::fabs(v[i]);
    if (std::fabs(v[i]) > std::fabs(v[lead])) lead = i;
  }
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument(
        "ray normalization needs a finite nonzero vector");
  }
  const double scale = (v[lead] < 0.0) ? -1.0 / norm : 1.0 / norm;
  for (double& c : v) c *= scale;
}

// Uniform double in (0, 1].
double next_unit(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53 +
         0x1.0p-54;
}

double type7_quantile(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = p * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= n) return sorted[n - 1];
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] -
                                                       sorted[lo]);
}

}  // namespace

Ray make_ray(std::vector<double> v) {
  if (v.empty()) {
    throw std::invalid_argument("ray needs at least one coordinate");
  }
  canonicalize(v);
  return Ray{std::move(v)};
}

Ray uniform_ray(std::size_t dimension) {
  if (dimension == 0) {
    throw std::invalid_argument("ray needs at least one coordinate");
  }
  return make_ray(std::vector<double>(dimension, 1.0));
}

double ray_distance(const Ray& a, const Ray& b) {
  if (a.coords.size() != b.coords.size()) {
    throw std::invalid_argument("ray_distance: dimension mismatch");
  }
  double l1 = 0.0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    l1 += std::fabs(a.coords[i] - b.coords[i]);
  }
  return l1 / 2.0;
}

IterationTrace project_iterate(const Mat& m, const Ray& v0, int steps) {
  const std::size_t n = m.dim();
  if (n == 0 || v0.coords.size() != n) {
    throw std::invalid_argument("project_iterate: dimension mismatch");
  }
  if (steps < 1) {
    throw std::invalid_argument("project_iterate: steps must be >= 1");
  }

  const std::vector<double> md = narrow_matrix(m);
  auto apply = [&md, n](const std::vector<double>& u) {
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += md[i * n + j] * u[j];
      w[i] = acc;
    }
    canonicalize(w);  // throws if the word annihilated the ray
    return w;
  };

  std::vector<std::vector<double>> orbit;
  orbit.reserve(static_cast<std::size_t>(steps) + 1);
  std::vector<double> v = v0.coords;
  canonicalize(v);
  orbit.push_back(v);
  for (int s = 0; s < steps; ++s) {
    v = apply(v);
    orbit.push_back(v);
  }

  // Distances are measured against the settled limit, not the last
  // requested iterate, so a slow tail does not contaminate the fit; keep
  // iterating (without recording) until the ray stops moving.
  const long extension_cap = std::max(50000L, 10L * steps);
  for (long s = 0; s < extension_cap; ++s) {
    std::vector<double> w = apply(v);
    const double moved = ray_distance(Ray{v}, Ray{w});
    v = std::move(w);
    if (moved < 1e-15) break;
  }

  IterationTrace trace;
  trace.start = Ray{orbit.front()};
  trace.limit = Ray{std::move(v)};
  trace.steps = steps;
  trace.distances.reserve(orbit.size());
  for (const auto& u : orbit) {
    trace.distances.push_back(ray_distance(Ray{u}, trace.limit));
  }
  trace.converged = trace.distances.back() < 1e-12;

  const double d0 = trace.distances.front();
  for (std::size_t i = 0; i < trace.distances.size(); ++i) {
    if (trace.distances[i] < d0 / 10.0) {
      trace.transient_steps = static_cast<int>(i);
      break;
    }
  }

  try {
    trace.fitted_rate = estimate_rate(trace);
  } catch (const std::domain_error&) {
    trace.fitted_rate = std::numeric_limits<double>::quiet_NaN();
  }
  return trace;
}

double estimate_rate(const IterationTrace& trace) {
  const std::size_t total = trace.distances.size();
  const std::size_t start =
      trace.transient_steps >= 0 ? static_cast<std::size_t>(
                                       trace.transient_steps)
                                 : total;  // no transient: nothing usable
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  for (std::size_t i = start; i + 1 < total; ++i) {
    const double d = trace.distances[i];
    if (d <= kNoiseFloor) continue;
    const double x = static_cast<double>(i);
    const double y = std::log2(d);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 10) {
    throw std::domain_error(
        "estimate_rate: fewer than 10 usable iterates between the "
        "transient and the noise floor");
  }
  const double cn = static_cast<double>(count);
  const double den = cn * sxx - sx * sx;
  const double slope = (cn * sxy - sx * sy) / den;
  return std::exp2(slope);
}

NorthSouthReport north_south_check(const Mat& m, int trials,
                                   std::uint64_t seed, int steps,
                                   double tolerance) {
  const std::size_t n = m.dim();
  if (n == 0 || trials < 2) {
    throw std::invalid_argument(
        "north_south_check: needs a nonempty matrix and >= 2 trials");
  }
  if (!m.is_nonnegative()) {
    throw std::domain_error("north_south_check: matrix has negative entries");
  }

  // Wielandt: a nonnegative n x n matrix is primitive iff some power up to
  // n^2 - 2n + 2 is strictly positive.
  const long wielandt = static_cast<long>(n) * static_cast<long>(n) -
                        2 * static_cast<long>(n) + 2;
  NorthSouthReport rep;
  Mat power = m;
  bool primitive = false;
  for (long e = 1; e <= wielandt; ++e) {
    bool positive = true;
    for (std::size_t i = 0; i < n && positive; ++i) {
      for (std::size_t j = 0; j < n && positive; ++j) {
        positive = power.at(i, j) > 0;
      }
    }
    if (positive) {
      primitive = true;
      rep.power_checked = static_cast<int>(e);
      break;
    }
    if (e < wielandt) power = power * m;
  }
  if (!primitive) {
    std::ostringstream os;
    os << "north_south_check: matrix is not primitive (no power up to the "
          "Wielandt exponent "
       << wielandt
       << " is strictly positive; the identity fails this way)";
    throw std::domain_error(os.str());
  }

  rep.trials = trials;
  std::uint64_t state = seed;
  std::vector<Ray> limits;
  limits.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    std::vector<double> start(n);
    for (double& c : start) c = 0.05 + 0.95 * next_unit(state);
    IterationTrace trace = project_iterate(m, make_ray(std::move(start)),
                                           steps);
    limits.push_back(trace.limit);
  }

  for (std::size_t a = 0; a < limits.size(); ++a) {
    for (std::size_t b = a + 1; b < limits.size(); ++b) {
      rep.max_limit_spread =
          std::max(rep.max_limit_spread, ray_distance(limits[a], limits[b]));
    }
  }

  rep.limit = limits.front();
  const std::vector<double> md = narrow_matrix(m);
  std::vector<double> image(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += md[i * n + j] * rep.limit.coords[j];
    }
    image[i] = acc;
  }
  double lambda = 0.0;
  for (double c : image) lambda += std::fabs(c);
  rep.lambda = lambda;
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    residual += std::fabs(image[i] - lambda * rep.limit.coords[i]);
  }
  rep.eigen_residual = residual;
  rep.pass = rep.max_limit_spread <= tolerance &&
             rep.eigen_residual <= tolerance * lambda;
  return rep;
}

namespace {

// Spectral data of one word, or a skip reason.
void analyze_word(const Mat& m, SampleRecord& rec) {
  Poly cp = char_poly(m);
  Factorization fz = factor_over_z(cp);

  Poly mp;
  try {
    mp = minimal_poly_of_dominant_root(cp);
  } catch (const std::domain_error&) {
    rec.skipped_reason = "dominant root not unique";
    return;
  }
  for (const FactorPart& part : fz.factors) {
    if (part.factor == mp && part.multiplicity > 1) {
      rec.skipped_reason = "dominant root not simple";
      return;
    }
  }

  RootSet rs = all_roots(mp, 64);
  const RootDisk& dom = rs.roots.front();
  if (!dom.is_real || !(dom.re - dom.radius > 0)) {
    rec.skipped_reason = "dominant root not a positive real";
    return;
  }
  rec.dilatation = to_certified(RealEnclosure(dom.re - dom.radius,
                                              dom.re + dom.radius))
                       .value;

  if (mp.degree() == 1) {
    rec.skipped_reason = "ratio undefined (degree-1 minimal polynomial)";
    return;
  }
  RatioResult rr = spectral_ratio_of_poly(mp, 64);
  if (rr.status == RatioStatus::unresolved) {
    rec.skipped_reason = "ratio unresolved at the precision budget";
    return;
  }
  rec.spectral_ratio = to_certified(rr.ratio).value;
  const double second = rec.dilatation / rec.spectral_ratio;
  rec.log_ratio = std::log(rec.dilatation) / std::log(second);
}

}  // namespace

std::vector<SampleRecord> sample_words(const GeneratorSet& gens,
                                       const std::vector<int>& lengths,
                                       int count, std::uint64_t base_seed) {
  if (gens.generators().empty()) {
    throw std::invalid_argument("sample_words: empty generator set");
  }
  if (lengths.empty()) {
    throw std::invalid_argument("sample_words: no lengths requested");
  }
  for (int len : lengths) {
    if (len < 1) {
      throw std::invalid_argument(
          "sample_words: length must be >= 1 (a zero-length word has no "
          "letters to sample)");
    }
  }
  if (count < 1) {
    throw std::invalid_argument("sample_words: count must be >= 1");
  }

  const std::size_t alphabet = gens.generators().size();
  std::vector<SampleRecord> out;
  out.reserve(lengths.size() * static_cast<std::size_t>(count));
  std::uint64_t index = 0;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int len : lengths) {
    for (int c = 0; c < count; ++c, ++index) {
      SampleRecord rec;
      rec.seed = mix_seed(base_seed, index);
      rec.length = len;
      rec.dilatation = nan;
      rec.spectral_ratio = nan;
      rec.log_ratio = nan;

      std::uint64_t state = rec.seed;
      Word word(static_cast<std::size_t>(len));
      for (WordLetter& letter : word) {
        letter.index = static_cast<int>(splitmix64(state) % alphabet);
        letter.inverse = false;
      }
      rec.word = word_to_string(gens, word);

      try {
        analyze_word(word_product(gens, word), rec);
      } catch (const std::exception&) {
        rec.skipped_reason = "spectral analysis failed";
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<LengthSummary> summarize_samples(
    const std::vector<SampleRecord>& records) {
  std::vector<int> lengths;
  for (const SampleRecord& r : records) {
    if (std::find(lengths.begin(), lengths.end(), r.length) ==
        lengths.end()) {
      lengths.push_back(r.length);
    }
  }
  std::sort(lengths.begin(), lengths.end());

  std::vector<LengthSummary> rows;
  rows.reserve(lengths.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int len : lengths) {
    LengthSummary row;
    row.length = len;
    std::vector<double> ratios;
    for (const SampleRecord& r : records) {
      if (r.length != len) continue;
      if (r.skipped()) {
        ++row.skipped;
      } else {
        ratios.push_back(r.spectral_ratio);
      }
    }
    row.samples = static_cast<int>(ratios.size());
    if (ratios.empty()) {
      row.min = row.q1 = row.median = row.q3 = row.max = nan;
    } else {
      std::sort(ratios.begin(), ratios.end());
      row.min = ratios.front();
      row.q1 = type7_quantile(ratios, 0.25);
      row.median = type7_quantile(ratios, 0.5);
      row.q3 = type7_quantile(ratios, 0.75);
      row.max = ratios.back();
    }
    rows.push_back(row);
  }
  return rows;
}

std::string records_csv(const std::vector<SampleRecord>& records) {
  std::ostringstream os;
  os << "seed,length,word,dilatation,spectral_ratio,log_ratio,"
        "skipped_reason\n";
  for (const SampleRecord& r : records) {
    os << r.seed << ',' << r.length << ',' << r.word << ',';
    if (r.skipped()) {
      os << ",,";
    } else {
      os << format_double(r.dilatation) << ','
         << format_double(r.spectral_ratio) << ','
         << format_double(r.log_ratio);
    }
    os << ',' << r.skipped_reason << '\n';
  }
  return os.str();
}

std::string summaries_csv(const std::vector<LengthSummary>& rows) {
  std::ostringstream os;
  os << "length,min,q1,median,q3,max,samples,skipped\n";
  for (const LengthSummary& row : rows) {
    os << row.length << ',' << format_double(row.min) << ','
       << format_double(row.q1) << ',' << format_double(row.median) << ','
       << format_double(row.q3) << ',' << format_double(row.max) << ','
       << row.samples << ',' << row.skipped << '\n';
  }
  return os.str();
}

std::string trace_csv(const IterationTrace& trace) {
  std::ostringstream os;
  os << "step,distance\n";
  for (std::size_t i = 0; i < trace.distances.size(); ++i) {
    os << i << ',' << format_double(trace.distances[i]) << '\n';
  }
  return os.str();
}

}  // namespace specratio
