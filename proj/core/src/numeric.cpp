// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace specratio {

BigInt fibonacci(unsigned long n) {
  BigInt r;
  mpz_fib_ui(r.get_mpz_t(), n);
  return r;
}

long bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

double log2_abs(const BigInt& v) {
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::fabs(d)) + static_cast<double>(exp);
}

double log2_abs(const Rational& v) {
  return log2_abs(BigInt(v.get_num())) - log2_abs(BigInt(v.get_den()));
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for n < 3.3 * 10^24 (Sorenson-Webster),
  // which covers the full 64-bit range.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Rational round_to_bits(const Rational& v, long bits) {
  if (v == 0) return Rational(0);
  if (bits < 1) bits = 1;
  const BigInt& num = v.get_num();
  const BigInt& den = v.get_den();
  long mag = bit_length(num) - bit_length(den);  // log2|v| in [mag-1, mag+1]
  long s = bits - mag + 2;
  BigInt n2 = num, d2 = den;
  if (s >= 0) {
    mpz_mul_2exp(n2.get_mpz_t(), n2.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  } else {
    mpz_mul_2exp(d2.get_mpz_t(), d2.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
  }
  // Round n2/d2 to the nearest integer, ties away from zero.
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  BigInt r2 = 2 * abs(r);
  if (r2 >= d2) q += (sgn(n2) >= 0 ? 1 : -1);
  Rational out;
  if (s >= 0) {
    BigInt scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(s));
    out = Rational(q, scale);
  } else {
    BigInt scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(-s));
    out = Rational(q * scale);
  }
  out.canonicalize();
  return out;
}

BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt isqrt_ceil(const BigInt& n) {
  BigInt r = isqrt_floor(n);
  if (r * r != n) r += 1;
  return r;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

SqrtBounds sqrt_bounds(const Rational& q, long bits) {
  if (q < 0) throw std::domain_error("sqrt_bounds of negative value");
  if (q == 0) return {Rational(0), Rational(0)};
  if (bits < 1) bits = 1;
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  // sqrt(n/d) = sqrt(n*d)/d; scale so the integer sqrt carries `bits`
  // significant bits past the leading one.
  long t = bits + 4;
  BigInt scaled = num * den;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(),
               static_cast<mp_bitcnt_t>(2 * t));
  BigInt root = isqrt_floor(scaled);
  BigInt scale = den;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(),
               static_cast<mp_bitcnt_t>(t));
  SqrtBounds out;
  out.lo = Rational(root, scale);
  out.lo.canonicalize();
  if (root * root == scaled) {
    out.hi = out.lo;
  } else {
    out.hi = Rational(root + 1, scale);
    out.hi.canonicalize();
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t s = base + (index + 1) * 0x9E3779B97F4A7C15ull;
  return splitmix64(s);
}

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return BigInt(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed integer literal: " + text);
  }
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

double to_double(const Rational& v) { return v.get_d(); }

}  // namespace specratio
