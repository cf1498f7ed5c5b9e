// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/sturm.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace specratio {

namespace {

// Primitive part with the sign kept (divide by positive content only).
Poly sign_preserving_primitive(const Poly& f) {
  ContentPrimitive cp = content_primitive(f);
  return cp.content < 0 ? -cp.primitive : cp.primitive;
}

}  // namespace

SturmChain::SturmChain(const Poly& f) : f_(f) {
  if (f.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
  chain_.push_back(sign_preserving_primitive(f));
  if (f.degree() == 0) return;
  chain_.push_back(sign_preserving_primitive(f.derivative()));
  while (chain_.back().degree() > 0) {
    const Poly& a = chain_[chain_.size() - 2];
    const Poly& b = chain_.back();
    DivRem d = divrem(a, b);
    if (d.remainder.is_zero()) {
      // gcd(f, f') nontrivial; the chain still counts distinct roots only
      // when f is squarefree, so callers requiring isolation must check.
      break;
    }
    // True remainder = remainder/scale with scale = lc(b)^steps; only the
    // sign of the scale matters for the chain.
    Poly next = sgn(d.scale) < 0 ? d.remainder : -d.remainder;
    chain_.push_back(sign_preserving_primitive(next));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int count = 0;
  int prev = 0;
  for (const Poly& s : chain_) {
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++count;
    prev = sg;
  }
  return count;
}

int SturmChain::count_in(const Rational& lo, const Rational& hi) const {
  if (lo > hi) throw std::invalid_argument("inverted interval");
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_real_roots() const {
  if (f_.degree() <= 0) return 0;
  Rational b = cauchy_root_bound(f_);
  return count_in(-b, b);
}

Rational cauchy_root_bound(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("root bound of zero polynomial");
  BigInt m = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    BigInt a = abs(c[i]);
    if (a > m) m = a;
  }
  Rational bound = Rational(m) / Rational(abs(f.leading()));
  return bound + 1;
}

std::vector<IsolatingInterval> isolate_real_roots(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot isolate roots of zero");
  if (!is_squarefree(f))
    throw std::invalid_argument("isolation requires a squarefree polynomial");
  std::vector<IsolatingInterval> out;
  if (f.degree() == 0) return out;
  SturmChain chain(f);
  Rational b = cauchy_root_bound(f);
  struct Seg {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::deque<Seg> work;
  int vlo = chain.variations_at(-b);
  int vhi = chain.variations_at(b);
  if (vlo - vhi > 0) work.push_back({-b, b, vlo, vhi});
  while (!work.empty()) {
    Seg s = work.front();
    work.pop_front();
    int count = s.vlo - s.vhi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({s.lo, s.hi, s.vlo, s.vhi});
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    int vmid = chain.variations_at(mid);
    work.push_back({s.lo, mid, s.vlo, vmid});
    work.push_back({mid, s.hi, vmid, s.vhi});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) {
              return a.lo < b.lo;
            });
  return out;
}

void refine_to_width(const SturmChain& chain, IsolatingInterval& iv,
                     const Rational& max_width) {
  while (iv.hi - iv.lo > max_width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int vmid = chain.variations_at(mid);
    if (iv.variations_lo - vmid == 1) {
      iv.hi = mid;
      iv.variations_hi = vmid;
    } else {
      iv.lo = mid;
      iv.variations_lo = vmid;
    }
  }
}

std::vector<IsolatingInterval> isolate_real_roots_refined(
    const Poly& f, const Rational& max_width) {
  auto intervals = isolate_real_roots(f);
  SturmChain chain(f);
  for (auto& iv : intervals) refine_to_width(chain, iv, max_width);
  return intervals;
}

}  // namespace specratio
