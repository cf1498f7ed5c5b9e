// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/poly_mod.hpp"

#include <algorithm>
#include <stdexcept>

namespace specratio {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s < a || s >= p) s -= p;
  return s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

}  // namespace

PolyModP::PolyModP(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= p_;
  normalize();
}

void PolyModP::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t PolyModP::leading() const {
  if (c_.empty()) throw std::domain_error("leading of zero polynomial");
  return c_.back();
}

PolyModP PolyModP::derivative() const {
  if (c_.size() <= 1) return PolyModP(p_);
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = mulmod(c_[i], i % p_, p_);
  return PolyModP(p_, std::move(d));
}

PolyModP PolyModP::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  std::uint64_t inv = invmod(c_.back(), p_);
  std::vector<std::uint64_t> r = c_;
  for (auto& v : r) v = mulmod(v, inv, p_);
  return PolyModP(p_, std::move(r));
}

Poly PolyModP::to_poly() const {
  std::vector<BigInt> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    r[i] = BigInt(static_cast<unsigned long>(c_[i]));
  return Poly(std::move(r));
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("modulus mismatch");
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = addmod(a.coeff(i), b.coeff(i), a.p_);
  PolyModP out(a.p_);
  out.c_ = std::move(r);
  out.normalize();
  return out;
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("modulus mismatch");
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = submod(a.coeff(i), b.coeff(i), a.p_);
  PolyModP out(a.p_);
  out.c_ = std::move(r);
  out.normalize();
  return out;
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("modulus mismatch");
  PolyModP out(a.p_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a.c_[i], b.c_[j], p), p);
  }
  out.c_ = std::move(r);
  out.normalize();
  return out;
}

DivRemModP divrem(const PolyModP& a, const PolyModP& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::uint64_t p = a.prime();
  if (a.degree() < b.degree()) return {PolyModP(p), a};
  std::vector<std::uint64_t> r(a.coeffs());
  std::vector<std::uint64_t> q(
      static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const std::uint64_t lcinv = invmod(b.leading(), p);
  const auto& bc = b.coeffs();
  for (std::size_t i = r.size(); i-- > bc.size() - 1;) {
    std::size_t k = i - (bc.size() - 1);
    if (r[i] == 0) continue;
    std::uint64_t factor = mulmod(r[i], lcinv, p);
    q[k] = factor;
    for (std::size_t j = 0; j < bc.size(); ++j)
      r[k + j] = submod(r[k + j], mulmod(factor, bc[j], p), p);
  }
  return {PolyModP(p, std::move(q)), PolyModP(p, std::move(r))};
}

PolyModP gcd(const PolyModP& a, const PolyModP& b) {
  PolyModP u = a, v = b;
  while (!v.is_zero()) {
    PolyModP r = divrem(u, v).remainder;
    u = v;
    v = r;
  }
  return u.is_zero() ? u : u.monic();
}

PolyModP pow_mod(const PolyModP& base, const BigInt& e, const PolyModP& f) {
  if (e < 0) throw std::domain_error("negative exponent");
  PolyModP acc(f.prime(), {1});
  PolyModP b = divrem(base, f).remainder;
  const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (mp_bitcnt_t i = bits; i-- > 0;) {
    acc = divrem(acc * acc, f).remainder;
    if (mpz_tstbit(e.get_mpz_t(), i))
      acc = divrem(acc * b, f).remainder;
  }
  return acc;
}

PolyModP reduce_mod_p(const Poly& f, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime");
  std::vector<std::uint64_t> r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t v = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
    r[i] = v;
  }
  return PolyModP(p, std::move(r));
}

namespace {

// Equal-degree splitting of a monic squarefree product of irreducibles all
// of degree d (Cantor-Zassenhaus; trace method for p = 2).
void equal_degree_split(const PolyModP& f, int d, std::uint64_t& rng,
                        std::vector<PolyModP>& out) {
  const std::uint64_t p = f.prime();
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const int n = f.degree();
  PolyModP splitter(p);
  while (true) {
    std::vector<std::uint64_t> rc(static_cast<std::size_t>(n));
    for (auto& v : rc) v = splitmix64(rng) % p;
    PolyModP a(p, std::move(rc));
    if (a.is_zero()) continue;
    PolyModP g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < n) {
      splitter = g;
      break;
    }
    PolyModP b(p);
    if (p == 2) {
      // Trace map over F_{2^d}: a + a^2 + ... + a^(2^(d-1)).
      PolyModP t = a, term = a;
      for (int i = 1; i < d; ++i) {
        term = divrem(term * term, f).remainder;
        t = t + term;
      }
      b = t;
    } else {
      BigInt pd;
      mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                    static_cast<unsigned long>(d));
      BigInt e = (pd - 1) / 2;
      b = pow_mod(a, e, f) - PolyModP(p, {1});
    }
    PolyModP h = gcd(b, f);
    if (h.degree() > 0 && h.degree() < n) {
      splitter = h;
      break;
    }
  }
  equal_degree_split(splitter, d, rng, out);
  equal_degree_split(divrem(f, splitter).quotient.monic(), d, rng, out);
}

// Distinct-degree decomposition of a monic squarefree f; appends monic
// irreducible factors to out.
void factor_squarefree(const PolyModP& f0, std::uint64_t& rng,
                       std::vector<PolyModP>& out) {
  const std::uint64_t p = f0.prime();
  PolyModP f = f0.monic();
  PolyModP x(p, {0, 1});
  PolyModP h = divrem(x, f).remainder;
  int d = 0;
  while (f.degree() > 0 && f.degree() >= 2 * (d + 1)) {
    ++d;
    h = pow_mod(h, BigInt(static_cast<unsigned long>(p)), f);
    PolyModP g = gcd(h - x, f);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = divrem(f, g).quotient.monic();
      h = divrem(h, f).remainder;
    }
  }
  if (f.degree() > 0) out.push_back(f);
}

// p-th root of f when f'(x) = 0, i.e. f(x) = g(x)^p with g built from the
// coefficients at indices divisible by p (Frobenius on the prime field is
// the identity).
PolyModP pth_root(const PolyModP& f) {
  const std::uint64_t p = f.prime();
  std::vector<std::uint64_t> g;
  for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p))
    g.push_back(f.coeffs()[i]);
  return PolyModP(p, std::move(g));
}

void factor_rec(const PolyModP& f0, int mult, std::uint64_t& rng,
                std::vector<ModFactor>& out) {
  const std::uint64_t p = f0.prime();
  PolyModP f = f0.monic();
  if (f.degree() <= 0) return;
  PolyModP fp = f.derivative();
  if (fp.is_zero()) {
    factor_rec(pth_root(f), mult * static_cast<int>(p), rng, out);
    return;
  }
  // Char-p squarefree decomposition.
  PolyModP g = gcd(f, fp);
  PolyModP w = divrem(f, g).quotient.monic();
  int i = 1;
  while (w.degree() > 0) {
    PolyModP y = gcd(w, g);
    PolyModP z = divrem(w, y).quotient.monic();
    if (z.degree() > 0) {
      std::vector<PolyModP> irr;
      factor_squarefree(z, rng, irr);
      for (auto& q : irr) out.push_back({std::move(q), mult * i});
    }
    w = y;
    g = divrem(g, y).quotient.monic();
    ++i;
  }
  if (g.degree() > 0) factor_rec(pth_root(g), mult * static_cast<int>(p), rng, out);
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const PolyModP& f) {
  if (f.is_zero()) throw std::domain_error("factorization of zero polynomial");
  std::vector<ModFactor> out;
  if (f.degree() <= 0) return out;
  std::uint64_t rng = poly_hash(f.to_poly()) ^ (f.prime() * 0x9E3779B97F4A7C15ull);
  factor_rec(f, 1, rng, out);
  std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.factor.degree() != b.factor.degree())
      return a.factor.degree() < b.factor.degree();
    const auto& x = a.factor.coeffs();
    const auto& y = b.factor.coeffs();
    for (std::size_t i = x.size(); i-- > 0;)
      if (x[i] != y[i]) return x[i] < y[i];
    return false;
  });
  return out;
}

bool is_irreducible_mod_p(const PolyModP& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  auto factors = factor_mod_p(f);
  return factors.size() == 1 && factors[0].multiplicity == 1;
}

}  // namespace specratio
