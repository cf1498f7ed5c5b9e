// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/factor.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "specratio/poly_mod.hpp"
#include "specratio/roots.hpp"

namespace specratio {

std::string certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::degree_le_1:
      return "degree_le_1";
    case CertificateKind::mod_p:
      return "mod_p";
    case CertificateKind::recombination:
      return "recombination";
  }
  return "unknown";
}

Poly reconstruct(const Factorization& fz) {
  Poly acc = Poly::constant(fz.content);
  for (const auto& part : fz.factors)
    acc = acc * part.factor.pow(static_cast<unsigned>(part.multiplicity));
  return acc;
}

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f) {
  if (f.is_zero())
    throw std::domain_error("squarefree_decompose of zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly g = content_primitive(f).primitive;
  if (g.degree() < 1) return out;
  // Yun's algorithm over Z, exact divisions throughout.
  Poly a = gcd(g, g.derivative());
  Poly b = exact_div(g, a);
  Poly c = exact_div(g.derivative(), a);
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly pi = gcd(b, d);
    if (pi.degree() > 0) out.push_back({pi, i});
    b = exact_div(b, pi);
    c = exact_div(d, pi);
    d = c - b.derivative();
  }
  return out;
}

namespace {

bool poly_coeff_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const BigInt& x = a.coeff(static_cast<std::size_t>(i));
    const BigInt& y = b.coeff(static_cast<std::size_t>(i));
    if (x != y) return x < y;
  }
  return false;
}

// Coefficientwise reduction into [0, m).
Poly reduce_mod(const Poly& a, const BigInt& m) {
  std::vector<BigInt> c = a.coeffs();
  for (auto& x : c)
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return Poly(std::move(c));
}

// Symmetric representative: coefficients in (-m/2, m/2].
Poly sym_lift(const Poly& a, const BigInt& m) {
  std::vector<BigInt> c = a.coeffs();
  const BigInt half = m / 2;
  for (auto& x : c)
    if (x > half) x -= m;
  return Poly(std::move(c));
}

std::uint64_t modpow_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

// Bezout pair for coprime a, b over F_p: s*a + t*b = 1 with
// deg s < deg b, deg t < deg a.
std::pair<PolyModP, PolyModP> bezout_mod_p(const PolyModP& a,
                                           const PolyModP& b) {
  const std::uint64_t p = a.prime();
  PolyModP r0 = a, r1 = b;
  PolyModP s0(p, {1}), s1(p), t0(p), t1(p, {1});
  while (!r1.is_zero()) {
    DivRemModP d = divrem(r0, r1);
    r0 = r1;
    r1 = d.remainder;
    PolyModP s2 = s0 - d.quotient * s1;
    s0 = s1;
    s1 = s2;
    PolyModP t2 = t0 - d.quotient * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0)
    throw std::logic_error("bezout_mod_p: inputs not coprime");
  const std::uint64_t inv = modpow_u64(r0.coeff(0), p - 2, p);
  PolyModP scale(p, {inv});
  return {s0 * scale, t0 * scale};
}

Poly from_mod_p(const PolyModP& a) { return a.to_poly(); }

PolyModP to_mod_p(const Poly& a, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(a.coeffs().size());
  for (const BigInt& x : a.coeffs()) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
    c.push_back(r.get_ui());
  }
  return PolyModP(p, std::move(c));
}

// Hensel tree over the sorted modular factors. Node values are monic with
// residues in [0, M); s*left + t*right = 1 mod M at every internal node.
struct HNode {
  Poly val, s, t;
  std::unique_ptr<HNode> left, right;
  int leaf = -1;
};

std::unique_ptr<HNode> build_tree(const std::vector<Poly>& leaves, int lo,
                                  int hi, std::uint64_t p) {
  auto n = std::make_unique<HNode>();
  if (hi - lo == 1) {
    n->leaf = lo;
    n->val = leaves[static_cast<std::size_t>(lo)];
    return n;
  }
  const int mid = lo + (hi - lo) / 2;
  n->left = build_tree(leaves, lo, mid, p);
  n->right = build_tree(leaves, mid, hi, p);
  n->val = reduce_mod(n->left->val * n->right->val, BigInt(p));
  auto [s, t] = bezout_mod_p(to_mod_p(n->left->val, p), to_mod_p(n->right->val, p));
  n->s = from_mod_p(s);
  n->t = from_mod_p(t);
  return n;
}

// One quadratic Hensel step (f = g*h, s*g + t*h = 1) from modulus m to m^2;
// h stays monic, degrees are preserved.
void hensel_step(const Poly& f, Poly& g, Poly& h, Poly& s, Poly& t,
                 const BigInt& m2) {
  auto rm = [&m2](const Poly& x) { return reduce_mod(x, m2); };
  const Poly e = rm(f - g * h);
  DivRem qr = divrem(rm(s * e), h);
  const Poly q = rm(qr.quotient), r = rm(qr.remainder);
  const int dg = g.degree(), dh = h.degree();
  g = rm(g + t * e + q * g);
  h = rm(h + r);
  if (g.degree() != dg || h.degree() != dh || !h.is_monic())
    throw std::logic_error("hensel_step: degree drift");
  const Poly b = rm(s * g + t * h - Poly::constant(1));
  DivRem cd = divrem(rm(s * b), h);
  s = rm(s - cd.remainder);
  t = rm(t - t * b - rm(cd.quotient) * g);
}

void lift_tree(HNode* node, const Poly& value, const BigInt& m2) {
  node->val = reduce_mod(value, m2);
  if (node->leaf >= 0) return;
  Poly g = node->left->val, h = node->right->val;
  Poly s = reduce_mod(node->s, m2), t = reduce_mod(node->t, m2);
  hensel_step(node->val, g, h, s, t, m2);
  node->s = s;
  node->t = t;
  lift_tree(node->left.get(), g, m2);
  lift_tree(node->right.get(), h, m2);
}

void collect_leaves(const HNode* node, std::vector<Poly>& out) {
  if (node->leaf >= 0) {
    out.push_back(node->val);
    return;
  }
  collect_leaves(node->left.get(), out);
  collect_leaves(node->right.get(), out);
}

std::uint64_t good_prime(const Poly& g) {
  const BigInt key = g.leading() * discriminant(g);
  for (std::uint64_t p = 3;; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(key.get_mpz_t(), p) == 0) return p;
  }
}

// Factor a monic squarefree polynomial over Z given its modular leaves
// lifted to modulus M past the Mignotte bound. Returns monic irreducible
// factors with certificates (subset size 1 => still irreducible mod p).
std::vector<FactorPart> recombine(const Poly& h, std::vector<Poly> leaves,
                                  const BigInt& M, std::uint64_t p) {
  std::vector<FactorPart> out;
  Poly current = h;
  std::vector<std::size_t> remaining(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    // Enumerate s-subsets of `remaining` in lexicographic order.
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    bool found = false;
    while (true) {
      Poly prod = Poly::constant(1);
      for (std::size_t i : pick)
        prod = reduce_mod(prod * leaves[remaining[i]], M);
      const Poly cand = sym_lift(prod, M);
      bool ok = true;
      if (current.coeff(0) != 0) {
        // Cheap filter: the constant term must divide.
        if (cand.coeff(0) == 0 ||
            mpz_divisible_p(current.coeff(0).get_mpz_t(),
                            cand.coeff(0).get_mpz_t()) == 0)
          ok = false;
      }
      if (ok && divides(cand, current)) {
        FactorPart fp;
        fp.factor = cand;
        fp.multiplicity = 1;
        fp.certificate.kind =
            s == 1 ? CertificateKind::mod_p : CertificateKind::recombination;
        fp.certificate.prime = s == 1 ? p : 0;
        out.push_back(std::move(fp));
        current = exact_div(current, cand);
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end())
            next.push_back(remaining[i]);
        remaining = std::move(next);
        found = true;
        break;
      }
      // Advance the combination.
      std::size_t j = s;
      while (j-- > 0) {
        if (pick[j] + (s - j) < remaining.size()) {
          ++pick[j];
          for (std::size_t k = j + 1; k < s; ++k) pick[k] = pick[k - 1] + 1;
          break;
        }
        if (j == 0) {
          j = static_cast<std::size_t>(-1);
          break;
        }
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
    if (!found) ++s;
  }
  if (current.degree() >= 1) {
    FactorPart fp;
    fp.factor = current;
    fp.multiplicity = 1;
    fp.certificate.kind = remaining.size() == 1
                              ? CertificateKind::mod_p
                              : CertificateKind::recombination;
    fp.certificate.prime = remaining.size() == 1 ? p : 0;
    out.push_back(std::move(fp));
  }
  return out;
}

// h(x) = lc^(deg-1) * g(x/lc): monic companion of a primitive g, with
// coefficient i equal to g_i * lc^(deg-1-i).
Poly monicize(const Poly& g) {
  const BigInt& a = g.leading();
  const int n = g.degree();
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  BigInt scale = 1;
  for (int i = n - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = g.coeff(static_cast<std::size_t>(i)) * scale;
    scale *= a;
  }
  return Poly(std::move(c));
}

// Factor one primitive squarefree piece of degree >= 1.
std::vector<FactorPart> factor_squarefree(const Poly& g,
                                          std::vector<LiftingReport>& audits) {
  if (g.degree() == 1) {
    FactorPart fp;
    fp.factor = g;
    fp.certificate.kind = CertificateKind::degree_le_1;
    return {fp};
  }
  const std::uint64_t p = good_prime(g);
  const BigInt a = g.leading();
  const Poly h = a == 1 ? g : monicize(g);

  std::vector<ModFactor> mf = factor_mod_p(reduce_mod_p(h, p));
  if (mf.size() == 1 && mf[0].multiplicity == 1) {
    FactorPart fp;
    fp.factor = g;
    fp.certificate.kind = CertificateKind::mod_p;
    fp.certificate.prime = p;
    return {fp};
  }

  // Landau-Mignotte: any monic factor of h has |coeffs| <= 2^deg(h)*|h|_2.
  BigInt bound = isqrt_floor(h.l2_norm_squared()) + 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(),
               static_cast<unsigned long>(h.degree()));
  const BigInt target = 2 * bound + 1;

  std::vector<Poly> start;
  start.reserve(mf.size());
  for (const auto& m : mf) start.push_back(m.factor.to_poly());
  auto tree = build_tree(start, 0, static_cast<int>(start.size()), p);
  BigInt modulus(static_cast<unsigned long>(p));
  unsigned exponent = 1;
  while (modulus < target) {
    const BigInt m2 = modulus * modulus;
    lift_tree(tree.get(), reduce_mod(h, m2), m2);
    modulus = m2;
    exponent *= 2;
  }
  LiftingReport audit;
  audit.squarefree_input = g;
  audit.prime = p;
  audit.exponent = exponent;
  audit.modulus = modulus;
  audit.coefficient_bound = bound;
  audits.push_back(std::move(audit));

  std::vector<Poly> leaves;
  collect_leaves(tree.get(), leaves);
  std::vector<FactorPart> monic_parts = recombine(h, std::move(leaves), modulus, p);
  if (a == 1) return monic_parts;

  // Map factors of h back: x -> a*x, then strip content.
  std::vector<FactorPart> parts;
  Poly check = Poly::constant(1);
  for (auto& mp : monic_parts) {
    std::vector<BigInt> c = mp.factor.coeffs();
    BigInt scale = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
      scale *= a;
      c[i] *= scale;
    }
    FactorPart fp;
    fp.factor = content_primitive(Poly(std::move(c))).primitive;
    fp.multiplicity = 1;
    fp.certificate = mp.certificate;
    check = check * fp.factor;
    parts.push_back(std::move(fp));
  }
  if (!(check == g))
    throw std::logic_error("factor_squarefree: non-monic reconstruction failed");
  return parts;
}

}  // namespace

Factorization factor_over_z(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("factor_over_z of zero polynomial");
  Factorization out;
  ContentPrimitive cp = content_primitive(f);
  out.content = cp.content;
  for (const auto& [part, mult] : squarefree_decompose(f)) {
    for (FactorPart fp : factor_squarefree(part, out.liftings)) {
      fp.multiplicity = mult;
      out.factors.push_back(std::move(fp));
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPart& x, const FactorPart& y) {
              return poly_coeff_less(x.factor, y.factor);
            });
  if (!(reconstruct(out) == f))
    throw std::logic_error("factor_over_z: reconstruction failed");
  return out;
}

bool irreducible_mod_p_certificate(const Poly& f, std::uint64_t p) {
  PolyModP r = reduce_mod_p(f, p);  // validates primality of p
  if (r.degree() != f.degree())
    throw std::domain_error(
        "degree drops under reduction: leading coefficient divisible by p");
  return is_irreducible_mod_p(r);
}

Poly minimal_poly_of_dominant_root(const Poly& f) {
  if (f.is_zero() || f.degree() < 1)
    throw std::domain_error("minimal_poly_of_dominant_root needs a root");
  Factorization fz = factor_over_z(f);
  for (long bits = 64; bits <= 2048; bits *= 2) {
    struct Cand {
      std::size_t fac;
      bool nonreal;
    };
    std::vector<Cand> cands;
    std::vector<RealEnclosure> mods;
    std::vector<std::size_t> owner;
    std::vector<char> nonreal;
    bool all_met = true;
    for (std::size_t fi = 0; fi < fz.factors.size(); ++fi) {
      RootSet rs = all_roots(fz.factors[fi].factor, bits);
      if (!rs.precision_met) {
        all_met = false;
        break;
      }
      for (const auto& d : rs.roots) {
        mods.push_back(modulus_enclosure(d));
        owner.push_back(fi);
        nonreal.push_back(!d.is_real && abs(d.im) > d.radius ? 1 : 0);
      }
    }
    if (!all_met) continue;
    Rational max_lo = 0;
    for (const auto& m : mods) max_lo = std::max(max_lo, m.lo);
    for (std::size_t i = 0; i < mods.size(); ++i)
      if (mods[i].hi >= max_lo) cands.push_back({owner[i], nonreal[i] != 0});
    if (cands.size() == 1)
      return fz.factors[cands[0].fac].factor;
    for (const auto& c : cands)
      if (c.nonreal)
        throw std::domain_error(
            "dominant root is not unique: a complex-conjugate pair attains "
            "the maximum modulus");
  }
  throw std::domain_error(
      "dominant root not unique at certification precision");
}

}  // namespace specratio
