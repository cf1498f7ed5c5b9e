// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "specratio/factor.hpp"
#include "specratio/numeric.hpp"
#include "specratio/poly_mod.hpp"
#include "specratio/roots.hpp"
#include "specratio/spectral.hpp"
#include "specratio/sturm.hpp"

namespace specratio {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string fmt(const Rational& v) { return fmt(to_double(v)); }

void push(std::vector<CheckResult>& checks, std::string name, bool pass,
          std::string detail) {
  checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

// Strict certified ratio with the gap resolved to ~8 significant bits.
RatioResult certified_ratio(const Poly& mu) {
  for (long b = 96; b <= 8192; b *= 2) {
    RatioResult rr = spectral_ratio_of_poly(mu, b);
    if (rr.status != RatioStatus::strict) continue;
    if (!(rr.ratio.lo > 1)) continue;
    if ((rr.ratio.hi - rr.ratio.lo) * 256 <= rr.ratio.lo - 1) return rr;
  }
  throw std::domain_error("verify: spectral ratio gap could not be resolved");
}

std::string ratio_text(const RatioResult& rr) {
  std::ostringstream os;
  os << "sigma in [" << fmt(rr.ratio.lo) << ", " << fmt(rr.ratio.hi) << "]";
  return os.str();
}

void check_gap_floor(std::vector<CheckResult>& checks, const Poly& mu) {
  GapWitness w = ratio_gap_witness(mu);
  LemmaReport rep = lemma_check(w.minimal_poly, w.value);
  std::ostringstream os;
  os << "-log2(sigma - 1) = " << fmt(rep.neg_log2_alpha)
     << " <= height + degree = " << fmt(rep.height_plus_degree)
     << " (witness degree " << w.minimal_poly.degree() << ")";
  push(checks, "gap floor (Liouville)", rep.holds, os.str());
}

void verify_genus3_k(long k, std::vector<CheckResult>& checks) {
  const Mat m = genus3_matrix(k);
  const Poly sextic = genus3_sextic(k);
  const Poly expected = genus3_expected_charpoly(k);
  const Poly cp = char_poly(m);
  push(checks, "characteristic polynomial", cp == expected,
       "det(xI - M) == (x^3 - 1) * sextic, exact");

  // The charpoly must split as (x - 1)(x^2 + x + 1)(sextic), the sextic
  // staying irreducible.
  Factorization fz = factor_over_z(cp);
  bool split = fz.factors.size() == 3;
  if (split) {
    bool has_linear = false, has_cyclotomic = false, has_sextic = false;
    for (const FactorPart& part : fz.factors) {
      if (part.multiplicity != 1) split = false;
      if (part.factor == Poly({-1, 1})) has_linear = true;
      if (part.factor == Poly({1, 1, 1})) has_cyclotomic = true;
      if (part.factor == sextic) has_sextic = true;
    }
    split = split && has_linear && has_cyclotomic && has_sextic;
  }
  push(checks, "factor split", split,
       "factors are exactly {x - 1, x^2 + x + 1, sextic}");

  const PolyModP reduced = reduce_mod_p(sextic, 7);
  const bool pattern = reduced.to_poly() == Poly({1, 0, 4, 1, 4, 0, 1});
  const bool irr7 = irreducible_mod_p_certificate(sextic, 7);
  push(checks, "mod-7 certificate", pattern && irr7,
       "sextic reduces to x^6 + 4x^4 + x^3 + 4x^2 + 1, irreducible over F_7");

  const RatioResult rr = certified_ratio(sextic);
  const Genus3Bounds bounds = genus3_bounds(k);
  const bool above_one = rr.ratio.lo > 1;
  const bool below_fib = rr.ratio.hi <= bounds.fib_bound;
  const bool below_phi = rr.ratio.hi <= bounds.phi_bound.lo;
  {
    std::ostringstream os;
    os << ratio_text(rr) << "; 1 + 6/F(k) = " << fmt(bounds.fib_bound)
       << "; 1 + 14*phi^-k >= " << fmt(bounds.phi_bound.lo);
    push(checks, "ratio envelope", above_one && below_fib && below_phi,
         os.str());
  }

  // Substitution y = x + 1/x halves the degree; the cubic must match the
  // closed form and carry three real roots that lift back to the sextic.
  const unsigned long uk = static_cast<unsigned long>(k);
  const Poly cubic_expected({-fibonacci(2 * uk + 3),
                             -(fibonacci(2 * uk) + 3), BigInt(0), BigInt(1)});
  const Poly cubic = palindromic_reduce(sextic);
  std::vector<IsolatingInterval> ys = isolate_real_roots_refined(
      cubic, Rational(1, BigInt(1) << 64));
  std::sort(ys.begin(), ys.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) {
              return a.lo < b.lo;
            });
  bool cross = cubic == cubic_expected && ys.size() == 3;
  if (cross) {
    const RealEnclosure y_top(ys[2].lo, ys[2].hi);
    LiftedRoots lifted = lift_palindromic_roots(y_top, 96);
    const RootSet rs = all_roots(sextic, 96);
    const RealEnclosure dominant = modulus_enclosure(rs.roots.front());
    cross = lifted.real && !(lifted.plus.hi < dominant.lo) &&
            !(dominant.hi < lifted.plus.lo);
  }
  push(checks, "palindromic cross-check", cross,
       "cubic is y^3 - (F(2k)+3)y - F(2k+3); its top root lifts to the "
       "dilatation");

  // Root geometry: y_1 and y_-1 sit within 3 of +-5^(1/4)*F(k); y_0 lands
  // near -phi^3; the four middle sextic roots stay in |z| <= 5.
  bool geometry = ys.size() == 3;
  std::ostringstream geo;
  if (geometry) {
    const RealEnclosure root5(sqrt_bounds(Rational(5), 96).lo,
                              sqrt_bounds(Rational(5), 96).hi);
    const RealEnclosure quarter5 = sqrt_enclosure(root5, 96);
    const Rational fk(fibonacci(uk));
    const RealEnclosure scale(quarter5.lo * fk, quarter5.hi * fk);

    const RealEnclosure y1(ys[2].lo, ys[2].hi);
    const RealEnclosure ym1(ys[0].lo, ys[0].hi);
    const RealEnclosure y0(ys[1].lo, ys[1].hi);
    const RealEnclosure d1 = abs_enclosure(y1 - scale);
    const RealEnclosure dm1 = abs_enclosure(ym1 + scale);

    RealEnclosure phi3 = golden_ratio(96);
    phi3 = phi3 * phi3 * phi3;
    const RealEnclosure d0 = abs_enclosure(y0 + phi3);

    const RootSet rs = all_roots(sextic, 96);
    Rational middle_max(0);
    bool six = rs.roots.size() == 6;
    if (six) {
      for (std::size_t i = 2; i < 6; ++i) {
        middle_max = std::max(middle_max,
                              modulus_enclosure(rs.roots[i]).hi);
      }
    }
    geometry = six && d1.hi <= 3 && dm1.hi <= 3 && d0.hi <= Rational(1, 2) &&
               middle_max <= 5;
    geo << "|y(+-1) -+ 5^(1/4)F(k)| = {" << fmt(d1.hi) << ", "
        << fmt(dm1.hi) << "} <= 3; |y0 + phi^3| = " << fmt(d0.hi)
        << " <= 0.5; middle |roots| <= " << fmt(middle_max);
  } else {
    geo << "cubic did not yield three real roots";
  }
  push(checks, "root geometry", geometry, geo.str());

  check_gap_floor(checks, sextic);
}

void verify_s05_k(long k, std::vector<CheckResult>& checks) {
  const Poly quartic = s05_minimal_poly(k);
  const Poly quadratic = s05_reduced_quadratic(k);
  push(checks, "palindromic reduction",
       palindromic_reduce(quartic) == quadratic,
       "quartic reduces to y^2 - (2k+5)y + (k^2+4k+6), exact");

  Factorization fz = factor_over_z(quartic);
  push(checks, "irreducibility",
       fz.factors.size() == 1 && fz.factors[0].multiplicity == 1,
       "the quartic is the dilatation's minimal polynomial");

  const RatioResult rr = certified_ratio(quartic);

  // Closed form: y_+- = ((2k+5) +- sqrt(4k+1))/2, both lifting through
  // x + 1/x = y to real pairs; the ratio is x+(y_+)/x+(y_-).
  const SqrtBounds disc = sqrt_bounds(Rational(4 * BigInt(k) + 1), 96);
  const Rational t(2 * BigInt(k) + 5);
  const RealEnclosure y_plus((t + disc.lo) / 2, (t + disc.hi) / 2);
  const RealEnclosure y_minus((t - disc.hi) / 2, (t - disc.lo) / 2);
  const LiftedRoots top = lift_palindromic_roots(y_plus, 96);
  const LiftedRoots second = lift_palindromic_roots(y_minus, 96);
  bool formula = top.real && second.real;
  std::ostringstream ftext;
  if (formula) {
    const RealEnclosure sigma_formula = top.plus / second.plus;
    formula = !(sigma_formula.hi < rr.ratio.lo) &&
              !(rr.ratio.hi < sigma_formula.lo);
    ftext << "formula ratio in [" << fmt(sigma_formula.lo) << ", "
          << fmt(sigma_formula.hi) << "] overlaps " << ratio_text(rr);
  } else {
    ftext << "a reduced root failed to lift to a real pair";
  }
  push(checks, "quadratic-formula cross-check", formula, ftext.str());

  const Rational gap_hi = rr.ratio.hi - 1;
  const Rational gap_lo = rr.ratio.lo - 1;
  const bool upper = gap_hi * gap_hi * k <= 16;
  const bool lower = gap_lo * gap_lo * k >= 1;
  {
    std::ostringstream os;
    os << ratio_text(rr) << "; 1/sqrt(k) = " << fmt(1.0 / std::sqrt(double(k)))
       << " <= sigma - 1 <= 4/sqrt(k) = "
       << fmt(4.0 / std::sqrt(double(k)));
    push(checks, "ratio envelope", rr.ratio.lo > 1 && upper && lower,
         os.str());
  }

  check_gap_floor(checks, quartic);
}

void verify_gl3_k(long k, std::vector<CheckResult>& checks) {
  const Mat m = gl3_matrix(k);
  const Poly expected = gl3_expected_charpoly(k);
  push(checks, "characteristic polynomial", char_poly(m) == expected,
       "det(xI - M) == x^3 - 2^k x - 1, exact");
  push(checks, "determinant", det(m) == 1, "det(M) == 1, exact");

  const Poly mp = minimal_poly_of_dominant_root(expected);
  const Poly want = (k == 1) ? Poly({-1, -1, 1}) : expected;
  push(checks, "dominant factor", mp == want,
       k == 1 ? "cubic factors at k = 1; dominant factor is x^2 - x - 1"
              : "cubic is irreducible; it is its own dominant factor");

  const RatioResult rr = certified_ratio(mp);
  if (k >= 4) {
    // sigma - 1 within a factor 2 of 2^(-3k/2): compare squares exactly.
    BigInt p3k;
    mpz_ui_pow_ui(p3k.get_mpz_t(), 2, static_cast<unsigned long>(3 * k));
    const Rational gap_hi = rr.ratio.hi - 1;
    const Rational gap_lo = rr.ratio.lo - 1;
    const bool upper = gap_hi * gap_hi * p3k <= 4;
    const bool lower = gap_lo * gap_lo * p3k >= Rational(1, 4);
    std::ostringstream os;
    os << ratio_text(rr) << "; 2^(-3k/2) = "
       << fmt(std::exp2(-1.5 * double(k)));
    push(checks, "ratio envelope", rr.ratio.lo > 1 && upper && lower,
         os.str());
  } else {
    push(checks, "ratio envelope", rr.ratio.lo > 1,
         ratio_text(rr) + "; the factor-2 envelope is asserted for k >= 4");
  }

  check_gap_floor(checks, mp);
}

void verify_quadratic_k(long t, std::vector<CheckResult>& checks) {
  const SpectralReport rep = quadratic_floor(t);

  SqrtBounds s5 = sqrt_bounds(Rational(5), 96);
  const Rational phi4_lo = (7 + 3 * s5.lo) / 2;
  const Rational phi4_hi = (7 + 3 * s5.hi) / 2;
  const bool floored = !(rep.ratio.hi < phi4_lo);
  {
    std::ostringstream os;
    os << "sigma in [" << fmt(rep.ratio.lo) << ", " << fmt(rep.ratio.hi)
       << "] does not fall below phi^4 in [" << fmt(phi4_lo) << ", "
       << fmt(phi4_hi) << "]";
    push(checks, "ratio floor phi^4", floored, os.str());
  }

  const SqrtBounds disc = sqrt_bounds(Rational(BigInt(t) * t - 4), 96);
  const RealEnclosure lambda((t + disc.lo) / 2, (t + disc.hi) / 2);
  const RealEnclosure sigma = lambda * lambda;
  const bool overlap =
      !(sigma.hi < rep.ratio.lo) && !(rep.ratio.hi < sigma.lo);
  push(checks, "closed-form cross-check", overlap,
       "lambda^2 from the quadratic formula overlaps the certified ratio");
}

}  // namespace

VerifyReport verify_family(FamilyName name, const std::vector<long>& ks) {
  if (ks.empty()) {
    throw std::invalid_argument("verify_family: no parameters given");
  }
  std::string bad;
  for (long k : ks) {
    FamilyValidity v = family_validity(name, k);
    if (!v.valid) {
      if (!bad.empty()) bad += "; ";
      bad += v.reason;
    }
  }
  if (!bad.empty()) {
    throw std::invalid_argument(bad);
  }

  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.family = family_name_string(name);
  report.ks = ks;
  report.pass = true;

  for (long k : ks) {
    KReport kr;
    kr.k = k;
    switch (name) {
      case FamilyName::genus3:
        verify_genus3_k(k, kr.checks);
        break;
      case FamilyName::s05:
        verify_s05_k(k, kr.checks);
        break;
      case FamilyName::gl3:
        verify_gl3_k(k, kr.checks);
        break;
      case FamilyName::quadratic:
        verify_quadratic_k(k, kr.checks);
        break;
    }
    kr.pass = true;
    for (const CheckResult& c : kr.checks) kr.pass = kr.pass && c.pass;
    report.pass = report.pass && kr.pass;
    report.per_k.push_back(std::move(kr));
  }

  if (name == FamilyName::quadratic && ks.size() >= 2) {
    std::vector<long> sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    bool monotone = true;
    SpectralReport prev = quadratic_floor(sorted[0]);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      SpectralReport cur = quadratic_floor(sorted[i]);
      monotone = monotone && prev.ratio.hi < cur.ratio.lo;
      prev = std::move(cur);
    }
    push(report.family_checks, "monotone in the trace", monotone,
         "certified ratio enclosures are strictly increasing");
    report.pass = report.pass && monotone;
  }

  const auto t1 = std::chrono::steady_clock::now();
  report.seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(t1 - t0)
          .count();
  return report;
}

}  // namespace specratio
