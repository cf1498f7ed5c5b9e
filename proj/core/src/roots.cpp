// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "specratio/factor.hpp"
#include "specratio/sturm.hpp"

namespace specratio {

RealEnclosure modulus_enclosure(const RootDisk& d) {
  Rational m2 = d.re * d.re + d.im * d.im;
  SqrtBounds s = sqrt_bounds(m2, 96);
  Rational lo = s.lo - d.radius;
  if (lo < 0) lo = 0;
  return RealEnclosure(lo, s.hi + d.radius);
}

namespace {

Rational div_pow2(const Rational& v, unsigned long bits) {
  Rational r;
  mpq_div_2exp(r.get_mpq_t(), v.get_mpq_t(), bits);
  return r;
}

// ---- exact complex rational arithmetic -----------------------------------

struct QC {
  Rational re, im;
};

QC operator-(const QC& a, const QC& b) { return {a.re - b.re, a.im - b.im}; }
QC operator*(const QC& a, const QC& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm2(const QC& a) { return a.re * a.re + a.im * a.im; }
QC operator/(const QC& a, const QC& b) {
  Rational n = norm2(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

QC eval_poly(const Poly& f, const QC& z) {
  QC acc{Rational(0), Rational(0)};
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re += Rational(*it);
  }
  return acc;
}

QC round_qc(const QC& z, long bits) {
  return {round_to_bits(z.re, bits), round_to_bits(z.im, bits)};
}

// ---- floating seed phase (Aberth-Ehrlich) --------------------------------

using CLD = std::complex<long double>;

// Initial radii from the upper Newton polygon of (i, log2|a_i|); angles
// spread per radius group, salted so retries decorrelate.
std::vector<CLD> initial_guesses(const std::vector<double>& log2abs, int n,
                                 int salt) {
  std::vector<std::pair<int, double>> pts;
  for (int i = 0; i <= n; ++i)
    if (std::isfinite(log2abs[static_cast<std::size_t>(i)]))
      pts.push_back({i, log2abs[static_cast<std::size_t>(i)]});
  std::vector<std::pair<int, double>> hull;  // upper hull, left to right
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      if ((b.second - a.second) * (p.first - a.first) <=
          (p.second - a.second) * (b.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  std::vector<CLD> z;
  z.reserve(static_cast<std::size_t>(n));
  const long double tau = 6.283185307179586476925L;
  int group = 0;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int k1 = hull[e].first, k2 = hull[e + 1].first;
    const double slope = (hull[e].second - hull[e + 1].second) /
                         static_cast<double>(k2 - k1);
    long double r = powl(2.0L, static_cast<long double>(slope));
    const int m = k2 - k1;
    for (int j = 0; j < m; ++j) {
      long double ang = tau * (static_cast<long double>(j) + 0.26L +
                               0.33L * group) /
                            static_cast<long double>(m) +
                        0.77L * static_cast<long double>(salt) +
                        0.15L * static_cast<long double>(group);
      z.push_back(std::polar(r, ang));
    }
    ++group;
  }
  while (static_cast<int>(z.size()) < n) z.emplace_back(0.5L, 0.5L);
  return z;
}

std::vector<CLD> aberth_seeds(const Poly& g, int salt) {
  const int n = g.degree();
  const auto& c = g.coeffs();
  long maxe = std::numeric_limits<long>::min();
  std::vector<double> lg(c.size(), -std::numeric_limits<double>::infinity());
  std::vector<long> es(c.size(), 0);
  std::vector<double> ds(c.size(), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    signed long e = 0;
    double d = mpz_get_d_2exp(&e, c[i].get_mpz_t());
    es[i] = e;
    ds[i] = d;
    lg[i] = std::log2(std::fabs(d)) + static_cast<double>(e);
    if (e > maxe) maxe = e;
  }
  // Scale all coefficients by 2^-maxe: same roots, no coefficient overflow.
  std::vector<long double> a(c.size(), 0.0L);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    long sh = es[i] - maxe;
    a[i] = sh < -16300
               ? 0.0L
               : ldexpl(static_cast<long double>(ds[i]), static_cast<int>(sh));
  }
  std::vector<CLD> z = initial_guesses(lg, n, salt);
  std::vector<CLD> w(static_cast<std::size_t>(n));
  const long double eps = 1e-18L;
  for (int iter = 0; iter < 400; ++iter) {
    long double worst = 0.0L;
    for (int i = 0; i < n; ++i) {
      const CLD zi = z[static_cast<std::size_t>(i)];
      CLD p(0.0L, 0.0L), dp(0.0L, 0.0L);
      for (std::size_t k = c.size(); k-- > 0;) {
        dp = dp * zi + p;
        p = p * zi + a[k];
      }
      CLD corr;
      if (std::abs(dp) == 0.0L) {
        corr = CLD(1e-3L * (1.0L + std::abs(zi)), 1e-4L);
      } else {
        const CLD nw = p / dp;
        CLD s(0.0L, 0.0L);
        for (int j = 0; j < n; ++j)
          if (j != i) s += 1.0L / (zi - z[static_cast<std::size_t>(j)]);
        const CLD denom = 1.0L - nw * s;
        corr = std::abs(denom) == 0.0L ? nw : nw / denom;
        if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag()))
          corr = CLD(1e-3L * (1.0L + std::abs(zi)), 1e-4L);
      }
      w[static_cast<std::size_t>(i)] = corr;
      const long double rel = std::abs(corr) / (1.0L + std::abs(zi));
      if (rel > worst) worst = rel;
    }
    for (int i = 0; i < n; ++i)
      z[static_cast<std::size_t>(i)] -= w[static_cast<std::size_t>(i)];
    if (worst < eps) break;
  }
  return z;
}

// ---- exact polish and certification --------------------------------------

struct PolishResult {
  QC z;
  Rational radius;
  bool ok = false;
};

Rational rational_from_ld(long double v) {
  // Exact dyadic decomposition of a finite long double.
  if (v == 0.0L) return Rational(0);
  int e = 0;
  long double m = frexpl(v, &e);  // v = m * 2^e, 0.5 <= |m| < 1
  // The 64-bit mantissa is integral after scaling; split into 32-bit halves.
  long double scaled = ldexpl(m, 64);
  long long hi = static_cast<long long>(scaled / 4294967296.0L);
  long long lo = static_cast<long long>(
      scaled - static_cast<long double>(hi) * 4294967296.0L);
  BigInt num(static_cast<long>(hi));
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 32);
  num += BigInt(static_cast<long>(lo));
  Rational r(num);
  long shift = static_cast<long>(e) - 64;
  if (shift >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(shift));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-shift));
  return r;
}

// Newton iteration over exact complex rationals with dyadic rounding. The
// returned radius deg(g) * |g(z)/g'(z)| is certified to contain at least
// one root of g (nearest-root bound).
PolishResult polish_root(const Poly& g, const Poly& gd, const CLD& seed,
                         long workbits) {
  PolishResult out;
  QC z{round_to_bits(rational_from_ld(seed.real()), workbits),
       round_to_bits(rational_from_ld(seed.imag()), workbits)};
  const int max_iter = 80;
  for (int it = 0; it < max_iter; ++it) {
    QC val = eval_poly(g, z);
    if (val.re == 0 && val.im == 0) {
      out.z = z;
      out.radius = 0;
      out.ok = true;
      return out;
    }
    QC der = eval_poly(gd, z);
    if (der.re == 0 && der.im == 0) {
      z.re += Rational(1, (it + 3) * 1000);
      continue;
    }
    QC step = val / der;
    z = round_qc(z - step, workbits);
    Rational z2 = norm2(z);
    if (z2 == 0) z2 = Rational(1);
    if (norm2(step) <= div_pow2(z2, static_cast<unsigned long>(2 * workbits)))
      break;
  }
  QC val = eval_poly(g, z);
  if (val.re == 0 && val.im == 0) {
    out.z = z;
    out.radius = 0;
    out.ok = true;
    return out;
  }
  QC der = eval_poly(gd, z);
  if (der.re == 0 && der.im == 0) return out;  // degenerate; caller escalates
  Rational r2 = Rational(g.degree()) * Rational(g.degree()) * norm2(val) /
                norm2(der);
  out.z = z;
  out.radius = sqrt_bounds(r2, 48).hi;
  out.ok = true;
  return out;
}

bool disks_disjoint(const RootDisk& a, const RootDisk& b) {
  Rational dre = a.re - b.re;
  Rational dim = a.im - b.im;
  Rational d2 = dre * dre + dim * dim;
  Rational rs = a.radius + b.radius;
  return d2 > rs * rs;
}

// One attempt at fully certified roots of a squarefree primitive part.
bool roots_of_squarefree(const Poly& part, int multiplicity, long target_bits,
                         long workbits, int salt, std::vector<RootDisk>& out) {
  const int n = part.degree();
  if (n == 1) {
    RootDisk d;
    d.re = Rational(-part.coeff(0), part.coeff(1));
    d.re.canonicalize();
    d.im = 0;
    d.radius = 0;
    d.multiplicity = multiplicity;
    d.is_real = true;
    out.push_back(std::move(d));
    return true;
  }
  Poly deriv = part.derivative();
  std::vector<CLD> seeds = aberth_seeds(part, salt);
  std::vector<RootDisk> disks;
  disks.reserve(static_cast<std::size_t>(n));
  for (const CLD& s : seeds) {
    PolishResult p = polish_root(part, deriv, s, workbits);
    if (!p.ok) return false;
    RootDisk d;
    d.re = p.z.re;
    d.im = p.z.im;
    d.radius = p.radius;
    d.multiplicity = multiplicity;
    d.is_real = false;
    disks.push_back(std::move(d));
  }
  // Reality: disks that cannot touch the real axis are certified nonreal;
  // the others must exactly account for the Sturm real-root count.
  int axis_candidates = 0;
  for (const auto& d : disks)
    if (abs(d.im) <= d.radius) ++axis_candidates;
  const int real_count = SturmChain(part).count_real_roots();
  if (axis_candidates != real_count) return false;
  for (auto& d : disks) {
    if (abs(d.im) <= d.radius) {
      d.radius += abs(d.im);
      d.im = 0;
      d.is_real = true;
    }
  }
  // Relative precision: radius * 2^bits <= |center| - radius.
  for (const auto& d : disks) {
    if (d.radius == 0) continue;
    Rational lhs = d.radius;
    mpq_mul_2exp(lhs.get_mpq_t(), lhs.get_mpq_t(),
                 static_cast<unsigned long>(target_bits));
    lhs += d.radius;
    if (lhs * lhs > d.re * d.re + d.im * d.im) return false;
  }
  // Pairwise disjoint => each disk holds exactly one root.
  for (std::size_t i = 0; i < disks.size(); ++i)
    for (std::size_t j = i + 1; j < disks.size(); ++j)
      if (!disks_disjoint(disks[i], disks[j])) return false;
  for (auto& d : disks) out.push_back(std::move(d));
  return true;
}

double modulus_estimate(const RootDisk& d) {
  double re = to_double(d.re), im = to_double(d.im);
  return std::hypot(re, im);
}

}  // namespace

RootSet all_roots(const Poly& f, long precision_bits) {
  if (f.is_zero()) throw std::domain_error("all_roots of zero polynomial");
  if (f.degree() < 1) throw std::domain_error("all_roots needs degree >= 1");
  if (precision_bits < 8) precision_bits = 8;
  RootSet rs;
  rs.poly = f;
  rs.precision_bits = precision_bits;

  // Exact zero roots first.
  Poly g = f;
  int zero_mult = 0;
  while (g.coeff(0) == 0 && g.degree() >= 1) {
    std::vector<BigInt> shifted(g.coeffs().begin() + 1, g.coeffs().end());
    g = Poly(std::move(shifted));
    ++zero_mult;
  }

  std::vector<std::pair<Poly, int>> parts;
  if (g.degree() >= 1)
    for (auto& [p, m] : squarefree_decompose(g)) parts.push_back({p, m});

  const long start = std::max<long>(192, 2 * precision_bits + 64);
  const long cap = std::max<long>(8192, 16 * (precision_bits + 64));
  bool done = false;
  std::vector<RootDisk> disks;
  for (long workbits = start; workbits <= cap && !done; workbits *= 2) {
    for (int salt = 0; salt < 3 && !done; ++salt) {
      disks.clear();
      if (zero_mult > 0) {
        RootDisk d;
        d.re = 0;
        d.im = 0;
        d.radius = 0;
        d.multiplicity = zero_mult;
        d.is_real = true;
        disks.push_back(std::move(d));
      }
      bool ok = true;
      for (const auto& [p, m] : parts) {
        if (!roots_of_squarefree(p, m, precision_bits, workbits, salt, disks)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // Cross-part disjointness (parts are coprime, so roots are distinct).
      bool disjoint = true;
      for (std::size_t i = 0; i < disks.size() && disjoint; ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j)
          if (!disks_disjoint(disks[i], disks[j])) {
            disjoint = false;
            break;
          }
      if (disjoint) done = true;
    }
  }
  if (!done) {
    // Best effort: report unmet precision with whatever the last attempt
    // produced (still one disk per root when available).
    rs.precision_met = false;
    rs.achieved_bits = 0;
    rs.roots = std::move(disks);
    std::sort(rs.roots.begin(), rs.roots.end(),
              [](const RootDisk& a, const RootDisk& b) {
                return modulus_estimate(a) > modulus_estimate(b);
              });
    return rs;
  }
  rs.precision_met = true;
  long achieved = std::numeric_limits<long>::max();
  for (const auto& d : disks) {
    if (d.radius == 0) continue;
    double num = log2_abs(Rational(d.re * d.re + d.im * d.im)) / 2.0;
    double den = log2_abs(d.radius);
    long bits = static_cast<long>(std::floor(num - den));
    achieved = std::min(achieved, bits);
  }
  rs.achieved_bits = achieved == std::numeric_limits<long>::max()
                         ? precision_bits
                         : achieved;
  rs.roots = std::move(disks);
  std::sort(rs.roots.begin(), rs.roots.end(),
            [](const RootDisk& a, const RootDisk& b) {
              return modulus_estimate(a) > modulus_estimate(b);
            });
  return rs;
}

Poly palindromic_reduce(const Poly& p) {
  const int deg = p.degree();
  if (deg < 0 || deg % 2 != 0)
    throw std::invalid_argument("palindromic reduction needs even degree");
  const auto& c = p.coeffs();
  for (int i = 0; i <= deg; ++i)
    if (c[static_cast<std::size_t>(i)] != c[static_cast<std::size_t>(deg - i)])
      throw std::invalid_argument("polynomial is not palindromic");
  const int m = deg / 2;
  // p(x)/x^m = c_m + sum_{d>=1} c_{m+d} * D_d(y) with the Dickson
  // polynomials D_0 = 2, D_1 = y, D_{j+1} = y*D_j - D_{j-1} satisfying
  // x^d + x^-d = D_d(x + 1/x).
  Poly q = Poly::constant(c[static_cast<std::size_t>(m)]);
  Poly dprev = Poly::constant(2);
  Poly dcur = Poly::identity_x();
  const Poly y = Poly::identity_x();
  for (int d = 1; d <= m; ++d) {
    q = q + c[static_cast<std::size_t>(m + d)] * dcur;
    Poly dnext = y * dcur - dprev;
    dprev = dcur;
    dcur = dnext;
  }
  // Exact identity check: x^m * q(x + 1/x) == p, i.e.
  // sum_j q_j (x^2+1)^j x^(m-j) == p.
  Poly recon;
  const Poly x2p1({1, 0, 1});
  for (int j = 0; j <= q.degree(); ++j) {
    Poly term = x2p1.pow(static_cast<unsigned>(j));
    term = Poly::monomial(q.coeff(static_cast<std::size_t>(j)),
                          static_cast<std::size_t>(m - j)) *
           term;
    recon = recon + term;
  }
  if (!(recon == p))
    throw std::logic_error("palindromic reduction identity failed");
  return q;
}

LiftedRoots lift_palindromic_roots(const RealEnclosure& y, long bits) {
  RealEnclosure disc = y * y - RealEnclosure(Rational(4));
  LiftedRoots out;
  const RealEnclosure half(Rational(1, 2));
  if (disc.lo >= 0) {
    RealEnclosure s = sqrt_enclosure(disc, bits);
    out.real = true;
    out.plus = (y + s) * half;
    out.minus = (y - s) * half;
    return out;
  }
  if (disc.hi <= 0) {
    RealEnclosure s = sqrt_enclosure(-disc, bits);
    out.real = false;
    out.re = y * half;
    out.im_abs = s * half;
    return out;
  }
  throw std::invalid_argument(
      "enclosure of y^2 - 4 straddles zero; refine y first");
}

RatioResult spectral_ratio_of_poly(const Poly& f, long bits) {
  if (f.is_zero()) throw std::domain_error("spectral ratio of zero polynomial");
  Poly g = f;
  int zero_mult = 0;
  while (g.degree() >= 1 && g.coeff(0) == 0) {
    std::vector<BigInt> shifted(g.coeffs().begin() + 1, g.coeffs().end());
    g = Poly(std::move(shifted));
    ++zero_mult;
  }
  if (g.degree() < 2)
    throw std::domain_error(
        "spectral ratio undefined: fewer than two nonzero roots");
  RatioResult res;
  res.zero_root_multiplicity = zero_mult;
  const long cap = std::max<long>(4096, 8 * bits);
  for (long wb = bits; wb <= cap; wb *= 2) {
    RootSet rs = all_roots(g, wb);
    if (!rs.precision_met) continue;
    std::vector<RealEnclosure> mods;
    mods.reserve(rs.roots.size());
    for (const auto& d : rs.roots) mods.push_back(modulus_enclosure(d));
    Rational max_lo = 0;
    for (const auto& m : mods) max_lo = std::max(max_lo, m.lo);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < mods.size(); ++i)
      if (mods[i].hi >= max_lo) candidates.push_back(i);
    if (candidates.size() == 1) {
      const std::size_t c = candidates[0];
      if (rs.roots[c].multiplicity >= 2) {
        res.status = RatioStatus::tie_equal_modulus;
        res.ratio = RealEnclosure(Rational(1));
        res.roots = std::move(rs);
        return res;
      }
      Rational second_lo = 0, second_hi = 0;
      bool have_second = false;
      for (std::size_t i = 0; i < mods.size(); ++i) {
        if (i == c) continue;
        have_second = true;
        second_lo = std::max(second_lo, mods[i].lo);
        second_hi = std::max(second_hi, mods[i].hi);
      }
      if (!have_second || second_lo == 0) continue;  // needs a sharper pass
      Rational lo = mods[c].lo / second_hi;
      Rational hi = mods[c].hi / second_lo;
      if (lo < 1) lo = 1;
      if (hi < lo) hi = lo;
      res.status = RatioStatus::strict;
      res.ratio = RealEnclosure(lo, hi);
      res.roots = std::move(rs);
      return res;
    }
    // Exact tie: every candidate is a point disk and all moduli agree.
    bool all_exact = true;
    for (std::size_t i : candidates)
      if (rs.roots[i].radius != 0) all_exact = false;
    if (all_exact && candidates.size() >= 2) {
      bool equal = true;
      Rational m0 = rs.roots[candidates[0]].re * rs.roots[candidates[0]].re +
                    rs.roots[candidates[0]].im * rs.roots[candidates[0]].im;
      for (std::size_t i : candidates) {
        Rational mi = rs.roots[i].re * rs.roots[i].re +
                      rs.roots[i].im * rs.roots[i].im;
        if (mi != m0) equal = false;
      }
      if (equal) {
        res.status = RatioStatus::tie_equal_modulus;
        res.ratio = RealEnclosure(Rational(1));
        res.roots = std::move(rs);
        return res;
      }
    }
    bool all_nonreal = true;
    for (std::size_t i : candidates)
      if (rs.roots[i].is_real || rs.roots[i].multiplicity >= 2)
        all_nonreal = false;
    if (all_nonreal && !candidates.empty()) {
      // The dominant root is nonreal; its conjugate has equal modulus.
      res.status = RatioStatus::tie_equal_modulus;
      res.ratio = RealEnclosure(Rational(1));
      res.roots = std::move(rs);
      return res;
    }
    if (wb * 2 > cap) {
      // Budget exhausted: conservative upper bound from this pass.
      Rational hi_mod = 0, lo_second = 0;
      for (const auto& m : mods) hi_mod = std::max(hi_mod, m.hi);
      std::vector<Rational> lows;
      for (const auto& m : mods) lows.push_back(m.lo);
      std::sort(lows.begin(), lows.end());
      if (lows.size() >= 2) lo_second = lows[lows.size() - 2];
      res.status = RatioStatus::unresolved;
      Rational hi = lo_second > 0 ? hi_mod / lo_second : hi_mod;
      if (hi < 1) hi = 1;
      res.ratio = RealEnclosure(Rational(1), hi);
      res.roots = std::move(rs);
      return res;
    }
  }
  res.status = RatioStatus::unresolved;
  res.ratio = RealEnclosure(Rational(1), Rational(2));
  return res;
}

std::vector<double> viete_cubic_roots(const Poly& cubic) {
  if (cubic.degree() != 3)
    throw std::invalid_argument("viete_cubic_roots needs a cubic");
  const double a = to_double(Rational(cubic.coeff(3)));
  const double b = to_double(Rational(cubic.coeff(2)));
  const double c = to_double(Rational(cubic.coeff(1)));
  const double d = to_double(Rational(cubic.coeff(0)));
  // Depress: x = t - b/(3a); t^3 + pt + q.
  const double p = (3 * a * c - b * b) / (3 * a * a);
  const double q =
      (2 * b * b * b - 9 * a * b * c + 27 * a * a * d) / (27 * a * a * a);
  if (p >= 0) throw std::domain_error("cubic does not have three real roots");
  const double disc = -4 * p * p * p - 27 * q * q;
  if (disc <= 0) throw std::domain_error("cubic does not have three real roots");
  const double r = 2 * std::sqrt(-p / 3);
  double arg = 3 * q / (2 * p) * std::sqrt(-3 / p);
  arg = std::clamp(arg, -1.0, 1.0);
  const double phi = std::acos(arg);
  std::vector<double> roots(3);
  for (int k = 0; k < 3; ++k)
    roots[static_cast<std::size_t>(k)] =
        r * std::cos(phi / 3 - 2 * M_PI * k / 3) - b / (3 * a);
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace specratio
