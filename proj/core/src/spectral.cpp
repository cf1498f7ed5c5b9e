// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/spectral.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "specratio/detail/bareiss.hpp"
#include "specratio/factor.hpp"
#include "specratio/numeric.hpp"
#include "specratio/roots.hpp"
#include "specratio/sturm.hpp"

namespace specratio {

namespace {

struct PolyRingTraits {
  Poly zero() const { return Poly::zero(); }
  Poly one() const { return Poly::constant(BigInt(1)); }
  bool is_zero(const Poly& p) const { return p.is_zero(); }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly exact_div(Poly a, const Poly& b) const {
    return specratio::exact_div(a, b);
  }
};

// Res_x of two polynomials in x whose coefficients are themselves integer
// polynomials in z, given in descending order of x-powers. The formal
// x-degrees are p.size()-1 and q.size()-1.
Poly resultant_in_x(const std::vector<Poly>& p, const std::vector<Poly>& q) {
  const std::size_t m = p.size() - 1;
  const std::size_t n = q.size() - 1;
  if (m == 0 && n == 0) return Poly::constant(BigInt(1));
  if (m == 0) return p[0].pow(static_cast<unsigned>(n));
  if (n == 0) return q[0].pow(static_cast<unsigned>(m));

  const std::size_t size = m + n;
  std::vector<std::vector<Poly>> syl(size,
                                     std::vector<Poly>(size, Poly::zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) syl[i][i + j] = p[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) syl[n + i][i + j] = q[j];
  }
  return detail::bareiss_det(std::move(syl), PolyRingTraits{});
}

Poly normalize_primitive(const Poly& f) {
  if (f.is_zero()) return f;
  return content_primitive(f).primitive;
}

// Strips a simple root at zero; returns how many were stripped (0 or 1 for
// squarefree input).
Poly deflate_zero_root(const Poly& f, int& stripped) {
  stripped = 0;
  if (f.is_zero() || f.coeff(0) != 0) return f;
  std::vector<BigInt> c(f.coeffs().begin() + 1, f.coeffs().end());
  stripped = 1;
  return Poly(std::move(c));
}

RegressionLine fit_line(const std::vector<double>& xs,
                        const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double den = static_cast<double>(n) * sxx - sx * sx;
  if (den == 0.0) {
    throw std::invalid_argument(
        "regression requires at least two distinct abscissae");
  }
  RegressionLine line;
  line.slope = (static_cast<double>(n) * sxy - sx * sy) / den;
  line.intercept = (sy - line.slope * sx) / static_cast<double>(n);
  line.residuals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    line.residuals.push_back(ys[i] - (line.intercept + line.slope * xs[i]));
  }
  return line;
}

}  // namespace

HeightValue height_of_poly(const Poly& f) {
  if (f.is_zero()) {
    throw std::domain_error("height_of_poly: zero polynomial has no height");
  }
  HeightValue h;
  h.of = f;
  h.value = log2_abs(f.max_abs_coeff());
  return h;
}

std::string height_op_name(HeightOp op) {
  switch (op) {
    case HeightOp::sum:
      return "sum";
    case HeightOp::product:
      return "product";
    case HeightOp::inverse:
      return "inverse";
  }
  throw std::logic_error("height_op_name: unknown enum value");
}

double height_bound(HeightOp op, double h1) {
  if (op != HeightOp::inverse) {
    throw std::invalid_argument("height_bound: " + height_op_name(op) +
                                " takes two heights");
  }
  return h1;
}

double height_bound(HeightOp op, double h1, double h2) {
  switch (op) {
    case HeightOp::sum:
      return h1 + h2 + 1.0;
    case HeightOp::product:
      return h1 + h2;
    case HeightOp::inverse:
      throw std::invalid_argument("height_bound: inverse takes one height");
  }
  throw std::logic_error("height_bound: unknown enum value");
}

Poly ratio_resultant(const Poly& mu) {
  const long n = mu.degree();
  if (mu.is_zero() || n < 1) {
    throw std::invalid_argument("ratio_resultant: degree >= 1 required");
  }
  if (!is_squarefree(mu)) {
    throw std::invalid_argument("ratio_resultant: input must be squarefree");
  }
  if (mu.coeff(0) == 0) {
    throw std::invalid_argument(
        "ratio_resultant: a zero root makes root ratios undefined");
  }

  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Poly> p(un + 1), q(un + 1);
  for (std::size_t i = 0; i <= un; ++i) {
    const BigInt& c = mu.coeff(un - i);  // descending entries
    p[i] = Poly::constant(c);
    q[i] = Poly::monomial(c, un - i);  // c * z^(n-i): coefficient of x^(n-i)
  }
  Poly r = normalize_primitive(resultant_in_x(p, q));
  if (r.degree() != n * n) {
    throw std::logic_error("ratio_resultant: unexpected degree");
  }
  return r;
}

Poly composed_poly(ComposeOp op, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero() || f.degree() < 1 || g.degree() < 1) {
    throw std::invalid_argument("composed_poly: both inputs need degree >= 1");
  }
  if (!is_squarefree(f) || !is_squarefree(g)) {
    throw std::invalid_argument("composed_poly: inputs must be squarefree");
  }
  const long target_degree = f.degree() * g.degree();

  Poly result;
  if (op == ComposeOp::sum) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const std::size_t m = static_cast<std::size_t>(g.degree());
    std::vector<Poly> p(n + 1), q(m + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      p[i] = Poly::constant(f.coeff(n - i));
    }
    // g(z - x): the x^i coefficient is (-1)^i * sum_j g_j C(j,i) z^(j-i).
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<BigInt> z(m - i + 1, BigInt(0));
      for (std::size_t j = i; j <= m; ++j) {
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j),
                     static_cast<unsigned long>(i));
        z[j - i] += g.coeff(j) * binom;
      }
      if (i % 2 == 1) {
        for (auto& c : z) c = -c;
      }
      q[m - i] = Poly(std::move(z));  // descending: index m-i holds x^i
    }
    result = resultant_in_x(p, q);
  } else {
    int fz = 0, gz = 0;
    const Poly fd = deflate_zero_root(f, fz);
    const Poly gd = deflate_zero_root(g, gz);
    const long zero_mult = fz * g.degree() + gz * f.degree() - fz * gz;

    Poly core = Poly::constant(BigInt(1));
    if (fd.degree() >= 1 && gd.degree() >= 1) {
      const std::size_t n = static_cast<std::size_t>(fd.degree());
      const std::size_t m = static_cast<std::size_t>(gd.degree());
      std::vector<Poly> p(n + 1), q(m + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        p[i] = Poly::constant(fd.coeff(n - i));
      }
      // x^m g(z/x) = sum_j g_j z^j x^(m-j); descending index i pairs with
      // the x^(m-i) term, whose coefficient is g_i z^i.
      for (std::size_t i = 0; i <= m; ++i) {
        q[i] = Poly::monomial(gd.coeff(i), i);
      }
      core = resultant_in_x(p, q);
    }
    result = core * Poly::monomial(BigInt(1),
                                   static_cast<std::size_t>(zero_mult));
  }

  result = normalize_primitive(result);
  if (result.degree() != target_degree) {
    throw std::logic_error("composed_poly: degree drift");
  }
  return result;
}

LemmaReport lemma_check(const Poly& alpha_poly,
                        const RealEnclosure& alpha_value) {
  if (alpha_poly.is_zero() || alpha_poly.degree() < 1) {
    throw std::invalid_argument(
        "lemma_check: alpha_poly must be nonconstant");
  }
  const Poly p = normalize_primitive(alpha_poly);
  Factorization fz = factor_over_z(p);
  if (fz.factors.size() != 1 || fz.factors[0].multiplicity != 1) {
    throw std::invalid_argument("lemma_check: alpha_poly is not irreducible");
  }

  // The enclosure must bracket a root of p.
  bool bracketed = false;
  if (p.eval(alpha_value.lo) == 0) {
    bracketed = true;
  } else if (alpha_value.lo < alpha_value.hi) {
    bracketed = SturmChain(p).count_in(alpha_value.lo, alpha_value.hi) >= 1;
  }
  if (!bracketed) {
    throw std::invalid_argument(
        "lemma_check: the enclosure does not bracket a root of alpha_poly");
  }
  if (alpha_value.contains_zero()) {
    throw std::domain_error("lemma_check: alpha is not certifiably nonzero");
  }

  LemmaReport rep;
  rep.alpha_poly = p;
  const RealEnclosure mag = abs_enclosure(alpha_value);
  rep.neg_log2_alpha = -log2_abs(mag.lo);
  rep.height_plus_degree =
      height_of_poly(p).value + static_cast<double>(p.degree());
  rep.holds = rep.neg_log2_alpha <= rep.height_plus_degree + 1e-9;
  return rep;
}

SpectralReport spectral_report_of_poly(const Poly& f, long bits) {
  if (f.is_zero() || f.degree() < 1) {
    throw std::domain_error(
        "spectral report requires a nonconstant polynomial");
  }
  SpectralReport rep;
  rep.source = ReportSource::poly;
  rep.certificates = factor_over_z(f);
  rep.minimal_poly = minimal_poly_of_dominant_root(f);
  const Poly& mp = rep.minimal_poly;
  rep.height_bits = height_of_poly(mp).value;

  RootSet rs = all_roots(mp, bits);
  const RealEnclosure dominant_modulus = modulus_enclosure(rs.roots.front());
  rep.dilatation = to_certified(dominant_modulus);

  if (mp.degree() == 1) {
    rep.ratio = RealEnclosure(Rational(1), Rational(1));
    rep.ratio_defined = false;
    rep.second_modulus = CertifiedValue{0.0, 0.0};
    rep.note = "ratio undefined (minimal polynomial " + mp.to_string() +
               " has degree 1)";
    return rep;
  }

  RatioResult rr = spectral_ratio_of_poly(mp, bits);
  rep.ratio = rr.ratio;
  rep.ratio_defined = true;
  if (rr.status == RatioStatus::unresolved) {
    rep.note = "dominant pair not separated within the precision budget; "
               "the ratio enclosure is an outer bound";
  }
  rep.second_modulus = to_certified(dominant_modulus * reciprocal(rr.ratio));
  return rep;
}

SpectralReport spectral_ratio_of_matrix(const Mat& m, long bits) {
  if (m.dim() == 0) {
    throw std::domain_error("spectral_ratio_of_matrix: empty matrix");
  }
  SpectralReport rep = spectral_report_of_poly(char_poly(m), bits);
  rep.source = ReportSource::matrix;
  return rep;
}

GapWitness ratio_gap_witness(const Poly& mu, long bits) {
  const Poly r = ratio_resultant(mu);
  Factorization fr = factor_over_z(r);

  for (long b = bits; b <= 16384; b *= 2) {
    RatioResult rr = spectral_ratio_of_poly(mu, b);
    if (rr.status != RatioStatus::strict) {
      throw std::domain_error(
          "ratio_gap_witness: the spectral ratio is not certified strict");
    }
    if (!(rr.ratio.lo > 1)) continue;  // gap not yet separated from zero
    const RealEnclosure gap(rr.ratio.lo - 1, rr.ratio.hi - 1);

    // sigma - 1 is a root of F(z+1) or of F(-(z+1)) for exactly one
    // irreducible factor F of the ratio resultant.
    std::vector<Poly> matches;
    for (const FactorPart& part : fr.factors) {
      for (int sign = 0; sign < 2; ++sign) {
        Poly g = (sign == 0)
                     ? part.factor.shifted(BigInt(1))
                     : part.factor.reflected().shifted(BigInt(1));
        if (g.leading() < 0) g = -g;
        if (g.degree() < 1) continue;
        bool hit = false;
        if (g.eval(gap.lo) == 0) {
          hit = true;
        } else if (gap.lo < gap.hi) {
          hit = SturmChain(g).count_in(gap.lo, gap.hi) >= 1;
        }
        if (hit) {
          bool dup = false;
          for (const Poly& seen : matches) dup = dup || seen == g;
          if (!dup) matches.push_back(std::move(g));
        }
      }
    }
    if (matches.size() == 1) {
      return GapWitness{std::move(matches.front()), gap};
    }
    // Zero or several candidates: the gap enclosure is still too wide.
  }
  throw std::domain_error(
      "ratio_gap_witness: could not isolate the gap's minimal polynomial "
      "within the precision budget");
}

ExperimentReport lower_bound_experiment(
    const std::vector<FamilyInstance>& instances) {
  ExperimentReport rep;
  for (const FamilyInstance& inst : instances) {
    if (!inst.valid) {
      ++rep.skipped_invalid;
      continue;
    }
    if (!inst.minimal_poly.has_value()) {
      throw std::invalid_argument(
          "lower_bound_experiment: instance lacks a minimal polynomial");
    }

    Rational mid, gap_mid;
    bool resolved = false;
    for (long b = 96; b <= 8192 && !resolved; b *= 2) {
      RatioResult rr = spectral_ratio_of_poly(*inst.minimal_poly, b);
      if (rr.status != RatioStatus::strict || !(rr.ratio.lo > 1)) continue;
      mid = (rr.ratio.lo + rr.ratio.hi) / 2;
      gap_mid = mid - 1;
      // Resolve the gap to ~8 significant bits before taking logs.
      resolved = (rr.ratio.hi - rr.ratio.lo) * 256 <= gap_mid;
    }
    if (!resolved) {
      throw std::domain_error(
          "lower_bound_experiment: ratio gap unresolved for " +
          family_name_string(inst.name) + " k=" + std::to_string(inst.k));
    }

    ExperimentPoint pt;
    pt.family = family_name_string(inst.name);
    pt.k = inst.k;
    pt.word_length = inst.word_length;
    pt.sigma = to_double(mid);
    pt.neg_log2_gap = -log2_abs(gap_mid);
    rep.points.push_back(std::move(pt));
  }

  if (rep.points.size() < 3) {
    throw std::invalid_argument(
        "lower_bound_experiment: needs at least 3 valid instances, got " +
        std::to_string(rep.points.size()));
  }

  std::vector<double> ks, lens, ys;
  for (const ExperimentPoint& pt : rep.points) {
    ks.push_back(static_cast<double>(pt.k));
    lens.push_back(static_cast<double>(pt.word_length));
    ys.push_back(pt.neg_log2_gap);
  }
  rep.vs_k = fit_line(ks, ys);
  rep.vs_word_length = fit_line(lens, ys);
  return rep;
}

}  // namespace specratio
