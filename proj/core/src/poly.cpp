// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "specratio/detail/bareiss.hpp"

namespace specratio {

namespace {
const BigInt kZero = 0;
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

Poly Poly::constant(BigInt c) {
  Poly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

Poly Poly::monomial(BigInt c, std::size_t power) {
  Poly p;
  if (c != 0) {
    p.c_.assign(power + 1, BigInt(0));
    p.c_[power] = std::move(c);
  }
  return p;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const BigInt& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = BigInt(i) * c_[i];
  return Poly(std::move(d));
}

BigInt Poly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Poly::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  // Homogeneous evaluation: sign of q^deg * f(p/q) with q > 0.
  const BigInt& p = x.get_num();
  const BigInt& q = x.get_den();
  BigInt acc = 0;
  BigInt qpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * p + (*it) * qpow;
    if (it + 1 != c_.rend()) qpow *= q;
  }
  return sgn(acc);
}

Poly Poly::shifted(const BigInt& a) const {
  if (a == 0 || c_.empty()) return *this;
  std::vector<BigInt> r = c_;
  const std::size_t n = r.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t j = n - 1; j-- > k;) r[j] += a * r[j + 1];
  return Poly(std::move(r));
}

Poly Poly::reflected() const {
  std::vector<BigInt> r = c_;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return Poly(std::move(r));
}

Poly Poly::reversed() const {
  std::vector<BigInt> r(c_.rbegin(), c_.rend());
  return Poly(std::move(r));
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(1);
  Poly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

BigInt Poly::max_abs_coeff() const {
  BigInt m = 0;
  for (const auto& c : c_) {
    BigInt a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

BigInt Poly::l2_norm_squared() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c * c;
  return s;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = c_.size(); j-- > 0;) {
    const BigInt& c = c_[j];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (j == 0 || a != 1) out << a.get_str();
    if (j >= 1) {
      out << "x";
      if (j >= 2) out << "^" << j;
    }
  }
  return out.str();
}

Poly operator-(const Poly& a) {
  std::vector<BigInt> r = a.coeffs();
  for (auto& c : r) c = -c;
  return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<BigInt> r(std::max(x.size(), y.size()), BigInt(0));
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<BigInt> r(x.size() + y.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const BigInt& c, const Poly& a) {
  std::vector<BigInt> r = a.coeffs();
  for (auto& v : r) v *= c;
  return Poly(std::move(r));
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  DivRem out;
  out.scale = 1;
  out.pseudo = false;
  if (a.degree() < b.degree()) {
    out.remainder = a;
    return out;
  }
  const BigInt& lc = b.leading();
  const int db = b.degree();
  // Pseudo-division: after the loop, lc^steps * a = q*b + r.
  Poly r = a;
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1,
                        BigInt(0));
  long steps = 0;
  while (!r.is_zero() && r.degree() >= db) {
    const int k = r.degree() - db;
    const BigInt t = r.leading();
    if (lc != 1) {
      for (auto& qc : q) qc *= lc;
      r = lc * r;
    }
    q[static_cast<std::size_t>(k)] += t;
    r = r - Poly::monomial(t, static_cast<std::size_t>(k)) * b;
    ++steps;
  }
  if (lc != 1 && steps > 0) {
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(),
               static_cast<unsigned long>(steps));
    // Prefer the true integer division when the pseudo result divides out.
    bool exact = true;
    for (const auto& c : q)
      if (!mpz_divisible_p(c.get_mpz_t(), scale.get_mpz_t())) {
        exact = false;
        break;
      }
    if (exact)
      for (const auto& c : r.coeffs())
        if (!mpz_divisible_p(c.get_mpz_t(), scale.get_mpz_t())) {
          exact = false;
          break;
        }
    if (exact) {
      for (auto& c : q) c /= scale;
      std::vector<BigInt> rc = r.coeffs();
      for (auto& c : rc) c /= scale;
      r = Poly(std::move(rc));
    } else {
      out.scale = scale;
      out.pseudo = true;
    }
  }
  out.quotient = Poly(std::move(q));
  out.remainder = std::move(r);
  return out;
}

Poly exact_div(const Poly& a, const Poly& b) {
  DivRem d = divrem(a, b);
  if (d.pseudo || !d.remainder.is_zero())
    throw std::domain_error("polynomial division not exact");
  return d.quotient;
}

bool divides(const Poly& b, const Poly& a) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  DivRem d = divrem(a, b);
  return !d.pseudo && d.remainder.is_zero();
}

ContentPrimitive content_primitive(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("content of zero polynomial");
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(f.leading()) < 0) g = -g;
  std::vector<BigInt> r = f.coeffs();
  for (auto& c : r) c /= g;
  return {g, Poly(std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return content_primitive(b).content < 0 ? -b : b;
  if (b.is_zero()) return content_primitive(a).content < 0 ? -a : a;
  ContentPrimitive ca = content_primitive(a);
  ContentPrimitive cb = content_primitive(b);
  BigInt cont;
  mpz_gcd(cont.get_mpz_t(), ca.content.get_mpz_t(), cb.content.get_mpz_t());
  Poly u = ca.primitive, v = cb.primitive;
  if (u.degree() < v.degree()) std::swap(u, v);
  // Primitive PRS: sizes stay tame for the degrees in scope.
  while (!v.is_zero()) {
    DivRem d = divrem(u, v);
    Poly r = d.remainder;
    u = v;
    if (r.is_zero()) {
      v = Poly();
    } else {
      v = content_primitive(r).primitive;
    }
  }
  return cont * u;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

struct BigIntTraits {
  BigInt zero() const { return BigInt(0); }
  BigInt one() const { return BigInt(1); }
  bool is_zero(const BigInt& v) const { return v == 0; }
  BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
  BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
  BigInt exact_div(BigInt a, const BigInt& b) const {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

}  // namespace

BigInt resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), a.leading().get_mpz_t(),
               static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(),
               static_cast<unsigned long>(m));
    return r;
  }
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, BigInt(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
          a.coeff(static_cast<std::size_t>(m - j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] =
          b.coeff(static_cast<std::size_t>(n - j));
  return detail::bareiss_det(std::move(s), BigIntTraits{});
}

BigInt discriminant(const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
  if (f.degree() == 1) return 1;
  BigInt res = resultant(f, f.derivative());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  const long n = f.degree();
  if (((n * (n - 1)) / 2) % 2 != 0) q = -q;
  return q;
}

Poly parse_poly_csv(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t b = token.find_first_not_of(" \t");
    std::size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("empty coefficient in list");
    coeffs.push_back(parse_bigint(token.substr(b, e - b + 1)));
  }
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  return Poly(std::move(coeffs));
}

std::string poly_to_csv(const Poly& f) {
  std::ostringstream out;
  const auto& c = f.coeffs();
  if (c.empty()) return "0";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << ",";
    out << c[i].get_str();
  }
  return out.str();
}

std::uint64_t poly_hash(const Poly& f) {
  std::uint64_t h = 0x243F6A8885A308D3ull ^ (f.coeffs().size() * 0x9E3779B97F4A7C15ull);
  for (const auto& c : f.coeffs()) {
    std::uint64_t v = mpz_fdiv_ui(c.get_mpz_t(), 0xFFFFFFFFFFFFFFC5ull);
    if (sgn(c) < 0) v = ~v;
    h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace specratio
