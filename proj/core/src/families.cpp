// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/families.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "specratio/factor.hpp"
#include "specratio/numeric.hpp"
#include "specratio/roots.hpp"
#include "specratio/spectral.hpp"

namespace specratio {

namespace {

// [lo, hi]^n for 0 < lo; n >= 1.
RealEnclosure enclosure_pow(const RealEnclosure& base, long n) {
  RealEnclosure acc = base;
  for (long i = 1; i < n; ++i) {
    acc = acc * base;
  }
  return acc;
}

std::string bad_k(FamilyName name, long k, const std::string& why) {
  std::ostringstream os;
  os << family_name_string(name) << ": k=" << k << " invalid: " << why;
  return os.str();
}

}  // namespace

std::string family_name_string(FamilyName name) {
  switch (name) {
    case FamilyName::genus3:
      return "genus3";
    case FamilyName::s05:
      return "s05";
    case FamilyName::gl3:
      return "gl3";
    case FamilyName::quadratic:
      return "quadratic";
  }
  throw std::logic_error("family_name_string: unknown enum value");
}

FamilyName parse_family_name(const std::string& text) {
  if (text == "genus3") return FamilyName::genus3;
  if (text == "s05") return FamilyName::s05;
  if (text == "gl3") return FamilyName::gl3;
  if (text == "quadratic") return FamilyName::quadratic;
  throw std::invalid_argument(
      "unknown family '" + text +
      "' (expected genus3, s05, gl3 or quadratic)");
}

FamilyValidity family_validity(FamilyName name, long k) {
  switch (name) {
    case FamilyName::genus3: {
      if (k < 7) return {false, bad_k(name, k, "requires k >= 7")};
      if (k % 8 != 2) {
        std::ostringstream os;
        os << k << " mod 8 = " << k % 8 << ", requires 2 (mod 8)";
        return {false, bad_k(name, k, os.str())};
      }
      return {true, ""};
    }
    case FamilyName::s05: {
      if (k <= 4) return {false, bad_k(name, k, "requires k > 4")};
      BigInt disc = BigInt(4) * k + 1;
      if (is_perfect_square(disc)) {
        std::ostringstream os;
        os << "4k+1 = " << disc.get_str() << " is a perfect square";
        return {false, bad_k(name, k, os.str())};
      }
      return {true, ""};
    }
    case FamilyName::gl3:
      if (k < 1) return {false, bad_k(name, k, "requires k >= 1")};
      return {true, ""};
    case FamilyName::quadratic:
      if (k < 3) {
        return {false,
                bad_k(name, k, "requires trace >= 3 (trace 2 gives a "
                               "repeated root and no expansion)")};
      }
      return {true, ""};
  }
  throw std::logic_error("family_validity: unknown enum value");
}

Mat genus3_matrix(long k) {
  if (k < 2) {
    throw std::domain_error(
        "genus3_matrix: requires k >= 2 to build the transition matrix");
  }
  const unsigned long uk = static_cast<unsigned long>(k);
  const BigInt f2km1 = fibonacci(2 * uk - 1);
  const BigInt f2k = fibonacci(2 * uk);
  const BigInt f2kp1 = fibonacci(2 * uk + 1);

  Mat m(9);
  auto unit_row = [&m](std::size_t row, std::size_t col) {
    m.at(row, col) = 1;
  };
  // Rows 0..2 shift the second curve triple; rows 6..8 the first.
  unit_row(0, 6);
  unit_row(1, 7);
  unit_row(2, 8);
  unit_row(6, 3);
  unit_row(7, 4);
  unit_row(8, 5);

  m.at(3, 0) = f2kp1;
  m.at(3, 1) = f2k;
  m.at(3, 2) = f2k;
  m.at(3, 8) = f2k;

  m.at(4, 0) = f2k;
  m.at(4, 1) = f2km1;
  m.at(4, 2) = f2km1 - 1;
  m.at(4, 8) = f2km1 - 1;

  m.at(5, 0) = f2kp1;
  m.at(5, 1) = f2k;
  m.at(5, 2) = f2k + 1;
  m.at(5, 3) = 1;
  m.at(5, 8) = f2k;
  return m;
}

Poly genus3_sextic(long k) {
  if (k < 2) {
    throw std::domain_error("genus3_sextic: requires k >= 2");
  }
  const unsigned long uk = static_cast<unsigned long>(k);
  const BigInt f2k = fibonacci(2 * uk);
  const BigInt f2kp3 = fibonacci(2 * uk + 3);
  // x^6 - F(2k) x^4 - F(2k+3) x^3 - F(2k) x^2 + 1.
  return Poly({BigInt(1), BigInt(0), -f2k, -f2kp3, -f2k, BigInt(0), BigInt(1)});
}

Poly genus3_expected_charpoly(long k) {
  const Poly x3m1({-1, 0, 0, 1});
  return x3m1 * genus3_sextic(k);
}

RealEnclosure golden_ratio(long bits) {
  SqrtBounds s5 = sqrt_bounds(Rational(5), bits);
  return RealEnclosure((1 + s5.lo) / 2, (1 + s5.hi) / 2);
}

Genus3Bounds genus3_bounds(long k) {
  FamilyValidity v = family_validity(FamilyName::genus3, k);
  if (!v.valid) {
    throw std::domain_error("genus3_bounds: " + v.reason);
  }
  Genus3Bounds b;
  b.fib_bound = Rational(1) + Rational(6) / Rational(fibonacci(
                                  static_cast<unsigned long>(k)));
  RealEnclosure phi = golden_ratio(96 + 2 * k);
  RealEnclosure inv_phi_k = reciprocal(enclosure_pow(phi, k));
  b.phi_bound = RealEnclosure(1 + 14 * inv_phi_k.lo, 1 + 14 * inv_phi_k.hi);
  return b;
}

Poly s05_minimal_poly(long k) {
  if (k < 1) {
    throw std::domain_error("s05_minimal_poly: requires k >= 1");
  }
  const BigInt t = 2 * BigInt(k) + 5;
  const BigInt mid = BigInt(k) * k + 4 * BigInt(k) + 8;
  return Poly({BigInt(1), -t, mid, -t, BigInt(1)});
}

Poly s05_reduced_quadratic(long k) {
  if (k < 1) {
    throw std::domain_error("s05_reduced_quadratic: requires k >= 1");
  }
  const BigInt t = 2 * BigInt(k) + 5;
  const BigInt c = BigInt(k) * k + 4 * BigInt(k) + 6;
  return Poly({c, -t, BigInt(1)});
}

Mat gl3_matrix(long k) {
  if (k < 1) {
    throw std::domain_error("gl3_matrix: requires k >= 1");
  }
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k));
  Mat m(3);
  m.at(0, 2) = 1;
  m.at(1, 0) = 1;
  m.at(1, 2) = pow2;
  m.at(2, 1) = 1;
  return m;
}

Poly gl3_expected_charpoly(long k) {
  if (k < 1) {
    throw std::domain_error("gl3_expected_charpoly: requires k >= 1");
  }
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Poly({BigInt(-1), -pow2, BigInt(0), BigInt(1)});
}

Poly quadratic_floor_poly(long t) {
  if (t < 3) {
    throw std::domain_error(
        "quadratic_floor_poly: requires trace >= 3 (trace 2 gives the "
        "repeated root 1)");
  }
  return Poly({BigInt(1), -BigInt(t), BigInt(1)});
}

SpectralReport quadratic_floor(long t) {
  const Poly f = quadratic_floor_poly(t);
  RatioResult rr = spectral_ratio_of_poly(f, 96);
  if (rr.status != RatioStatus::strict) {
    throw std::logic_error("quadratic_floor: ratio not certified strict");
  }

  // Independent enclosure from the quadratic formula: the ratio is
  // lambda/mu with lambda*mu = 1, so sigma = lambda^2.
  SqrtBounds s = sqrt_bounds(Rational(BigInt(t) * t - 4), 96);
  RealEnclosure lambda((t + s.lo) / 2, (t + s.hi) / 2);
  RealEnclosure sigma_alg = lambda * lambda;
  if (sigma_alg.hi < rr.ratio.lo || rr.ratio.hi < sigma_alg.lo) {
    throw std::logic_error(
        "quadratic_floor: root-based and formula-based ratio enclosures "
        "are disjoint");
  }

  // The floor phi^4 = (7 + 3*sqrt 5)/2 is attained at trace 3.
  SqrtBounds s5 = sqrt_bounds(Rational(5), 96);
  Rational phi4_lo = (7 + 3 * s5.lo) / 2;
  if (rr.ratio.hi < phi4_lo) {
    throw std::logic_error("quadratic_floor: ratio fell below phi^4");
  }

  SpectralReport rep;
  rep.source = ReportSource::family;
  rep.minimal_poly = f;
  rep.dilatation = to_certified(lambda);
  rep.second_modulus = to_certified(reciprocal(lambda));
  rep.ratio = rr.ratio;
  rep.ratio_defined = true;
  rep.height_bits = height_of_poly(f).value;
  rep.certificates = factor_over_z(f);
  return rep;
}

FamilyInstance make_instance(FamilyName name, long k) {
  FamilyInstance inst;
  inst.name = name;
  inst.k = k;
  FamilyValidity v = family_validity(name, k);
  inst.valid = v.valid;
  inst.invalid_reason = v.reason;

  switch (name) {
    case FamilyName::genus3: {
      inst.matrix = genus3_matrix(k);
      inst.minimal_poly = genus3_sextic(k);
      inst.word_length = 2 * k + 2;
      if (v.valid) {
        Genus3Bounds b = genus3_bounds(k);
        inst.bound_description = "1 < sigma <= 1 + 14*phi^-k and <= 1 + 6/F(k)";
        inst.bound_value = to_double(b.phi_bound.hi);
      } else {
        inst.bound_description = "no proved envelope (parameter outside range)";
      }
      break;
    }
    case FamilyName::s05: {
      inst.minimal_poly = s05_minimal_poly(k);
      inst.word_length = 2 * k + 2;
      if (v.valid) {
        inst.bound_description = "sigma - 1 in [1/sqrt(k), 4/sqrt(k)]";
        inst.bound_value = 1.0 + 4.0 / std::sqrt(static_cast<double>(k));
      } else {
        inst.bound_description = "no proved envelope (parameter outside range)";
      }
      break;
    }
    case FamilyName::gl3: {
      inst.matrix = gl3_matrix(k);
      // The cubic factors at k = 1; the dominant root is the golden ratio.
      inst.minimal_poly = (k == 1) ? Poly({-1, -1, 1})
                                   : gl3_expected_charpoly(k);
      inst.word_length = k;
      inst.bound_description = "sigma - 1 within a factor 2 of 2^(-3k/2)";
      inst.bound_value =
          1.0 + 2.0 * std::exp2(-1.5 * static_cast<double>(k));
      break;
    }
    case FamilyName::quadratic: {
      if (k < 3) {
        throw std::domain_error(
            "make_instance: " + family_validity(name, k).reason);
      }
      Mat m(2);
      m.at(0, 0) = k;
      m.at(0, 1) = -1;
      m.at(1, 0) = 1;
      inst.matrix = m;
      inst.minimal_poly = quadratic_floor_poly(k);
      inst.word_length = k;
      inst.bound_description = "sigma = lambda^2 >= phi^4 (floor, no decay)";
      inst.bound_value = 0.0;
      break;
    }
  }
  return inst;
}

std::vector<FamilyInstance> make_instances(FamilyName name,
                                           const std::vector<long>& ks) {
  std::vector<FamilyInstance> out;
  out.reserve(ks.size());
  for (long k : ks) {
    out.push_back(make_instance(name, k));
  }
  return out;
}

std::vector<long> parse_k_list(const std::string& text) {
  auto parse_long = [](const std::string& s) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad parameter '" + s + "'");
    }
    if (pos != s.size()) {
      throw std::invalid_argument("bad parameter '" + s + "'");
    }
    return v;
  };

  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) {
    throw std::invalid_argument("empty parameter list");
  }

  const std::size_t dots = t.find("..");
  if (dots != std::string::npos) {
    long lo = parse_long(t.substr(0, dots));
    long hi = parse_long(t.substr(dots + 2));
    if (lo > hi) {
      throw std::invalid_argument("bad range '" + t + "': lower end exceeds "
                                  "upper end");
    }
    if (hi - lo > 1000000) {
      throw std::invalid_argument("range '" + t + "' is too large");
    }
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }

  std::vector<long> out;
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t comma = t.find(',', start);
    std::string piece = (comma == std::string::npos)
                            ? t.substr(start)
                            : t.substr(start, comma - start);
    out.push_back(parse_long(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  auto status_of = [](int g, int p) -> std::string {
    if (g == 0 && p <= 3) return "N";
    if ((g == 0 && p == 4) || (g == 1 && p <= 1)) return "B";
    if ((g == 0 && (p == 5 || p == 6)) || (g == 1 && (p == 2 || p == 3)) ||
        (g == 2 && p == 0)) {
      return "P<=";
    }
    return "E";
  };

  std::vector<CatalogEntry> out;
  for (int g = 0; g <= 3; ++g) {
    for (int p = 0; p <= 7; ++p) {
      CatalogEntry e;
      e.genus = g;
      e.punctures = p;
      e.status = status_of(g, p);
      if (e.status == "N") {
        e.note = "sphere with at most three marked points carries no "
                 "pseudo-Anosov map";
      } else if (e.status == "B") {
        e.family = "quadratic";
        e.note = "dilatations are quadratic irrationals with trace >= 3, so "
                 "sigma = lambda^2 >= phi^4";
      } else if (e.status == "P<=") {
        e.note = "sigma - 1 <= 1/poly(word length) along the family";
      } else {
        e.note = "sigma - 1 <= 1/exp(word length) along the family";
      }
      out.push_back(std::move(e));
    }
  }

  auto cell = [&out](int g, int p) -> CatalogEntry& {
    return out[static_cast<std::size_t>(g * 8 + p)];
  };

  cell(3, 0).family = "genus3";
  cell(3, 0).word = "r . c . (a' . b)^k";
  cell(3, 0).note = "twist family with sigma - 1 <= 14*phi^-k";

  cell(0, 5).family = "s05";
  cell(0, 5).word = "s3 . s1^k . s4'^k . s2'";
  cell(0, 5).note = "braid family with sigma - 1 <= 4/sqrt(k)";

  cell(1, 2).word = "c . a^k . d'^k . b'";
  cell(2, 0).word = "c . a^k . d'^k . b'";

  cell(0, 6).note = "power of the (0,5) braid family with fixed points "
                    "punctured; polynomial decay persists";
  cell(1, 3).note = "power of the (1,2) twist family with fixed points "
                    "punctured; polynomial decay persists";

  cell(0, 7).word = "s4' . (s5 . s6')^k . (s1 . s2')^k . s3";
  cell(1, 4).word = "d' . (e . f')^k . (a . b')^k . c";
  cell(2, 1).word = "d' . (e . f')^k . (a . b')^k . c";

  for (int g = 0; g <= 3; ++g) {
    for (int p = 0; p <= 7; ++p) {
      CatalogEntry& e = cell(g, p);
      if (e.status == "E" && e.word.empty() && e.family.empty()) {
        e.note = "exponential decay lifted from a smaller surface by powers, "
                 "punctures, or covers";
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& behavior_catalog() {
  static const std::vector<CatalogEntry> table = build_catalog();
  return table;
}

std::string catalog_status(int genus, int punctures) {
  if (genus < 0 || genus > 3 || punctures < 0 || punctures > 7) {
    std::ostringstream os;
    os << "catalog_status: (" << genus << "," << punctures
       << ") outside the tabulated range genus 0..3, punctures 0..7";
    throw std::out_of_range(os.str());
  }
  return behavior_catalog()[static_cast<std::size_t>(genus * 8 + punctures)]
      .status;
}

}  // namespace specratio
