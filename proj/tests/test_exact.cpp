// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "specratio/interval.hpp"
#include "specratio/numeric.hpp"
#include "specratio/poly.hpp"
#include "specratio/sturm.hpp"

using namespace specratio;

TEST_CASE("fibonacci matches the recurrence and closed values") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(10) == 55);
  CHECK(fibonacci(20) == 6765);
  CHECK(fibonacci(23) == 28657);
  for (unsigned long n = 2; n < 90; ++n) {
    CHECK(fibonacci(n) == fibonacci(n - 1) + fibonacci(n - 2));
  }
}

TEST_CASE("bit_length and log2_abs agree on powers of two") {
  CHECK(bit_length(BigInt(1)) == 1);
  CHECK(bit_length(BigInt(255)) == 8);
  CHECK(bit_length(BigInt(256)) == 9);
  CHECK(log2_abs(BigInt(1024)) == doctest::Approx(10.0));
  CHECK(log2_abs(BigInt(-1024)) == doctest::Approx(10.0));
  CHECK(log2_abs(Rational(1, 8)) == doctest::Approx(-3.0));
}

TEST_CASE("is_prime_u64 on small and structured inputs") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(7));
  CHECK(is_prime_u64(28657));  // Fibonacci prime
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(6765));
  CHECK_FALSE(is_prime_u64(1ull << 40));
  CHECK(is_prime_u64((1ull << 31) - 1));  // Mersenne
}

TEST_CASE("integer square roots bracket exactly") {
  CHECK(isqrt_floor(BigInt(24)) == 4);
  CHECK(isqrt_ceil(BigInt(24)) == 5);
  CHECK(isqrt_floor(BigInt(25)) == 5);
  CHECK(isqrt_ceil(BigInt(25)) == 5);
  CHECK(is_perfect_square(BigInt(25)));
  CHECK_FALSE(is_perfect_square(BigInt(24)));
  BigInt big = BigInt(123456789) * BigInt(123456789);
  CHECK(is_perfect_square(big));
  CHECK_FALSE(is_perfect_square(big + 1));
}

TEST_CASE("sqrt_bounds encloses and tightens with precision") {
  SqrtBounds b = sqrt_bounds(Rational(2), 64);
  CHECK(b.lo * b.lo <= 2);
  CHECK(b.hi * b.hi >= 2);
  CHECK(b.hi - b.lo <= Rational(1, BigInt(1) << 60));
  SqrtBounds tighter = sqrt_bounds(Rational(2), 256);
  CHECK(tighter.hi - tighter.lo < b.hi - b.lo);
  CHECK_THROWS_AS(sqrt_bounds(Rational(-1), 32), std::domain_error);
}

TEST_CASE("splitmix64 is deterministic and mix_seed separates indices") {
  std::uint64_t s1 = 42, s2 = 42;
  for (int i = 0; i < 100; ++i) CHECK(splitmix64(s1) == splitmix64(s2));
  CHECK(mix_seed(7, 0) != mix_seed(7, 1));
  CHECK(mix_seed(7, 0) == mix_seed(7, 0));
}

TEST_CASE("parse_bigint round trips and rejects junk") {
  CHECK(parse_bigint("-12345678901234567890123") ==
        -(BigInt("12345678901234567890123")));
  CHECK(to_decimal(parse_bigint("00042")) == "42");
  CHECK_THROWS_AS(parse_bigint(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_bigint("12x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bigint("--1"), std::invalid_argument);
}

TEST_CASE("poly arithmetic identities") {
  Poly f({-1, -1, 1});  // x^2 - x - 1
  Poly g({2, 3});       // 3x + 2
  CHECK((f + g) - g == f);
  CHECK(f * g == g * f);
  CHECK((f * g).degree() == 3);
  CHECK(f.eval(BigInt(3)) == 5);
  CHECK(f.sign_at(Rational(1)) < 0);
  CHECK(f.sign_at(Rational(2)) > 0);
  CHECK(f.derivative() == Poly({-1, 2}));
}

TEST_CASE("shift, reflect, reverse") {
  Poly f({-1, 0, 1});  // x^2 - 1
  CHECK(f.shifted(BigInt(1)) == Poly({0, 2, 1}));  // (x+1)^2 - 1
  CHECK(f.reflected() == f);
  Poly g({1, 2, 3});
  CHECK(g.reversed() == Poly({3, 2, 1}));
  CHECK(g.reflected() == Poly({1, -2, 3}));
  // Taylor-shift correctness on a cubic: f(x+2) evaluated at 0 is f(2).
  Poly h({5, -4, 0, 7});
  CHECK(h.shifted(BigInt(2)).eval(BigInt(0)) == h.eval(BigInt(2)));
  CHECK(h.shifted(BigInt(2)).eval(BigInt(-2)) == h.eval(BigInt(0)));
}

TEST_CASE("division, gcd, content") {
  Poly a = Poly({-1, 0, 1}) * Poly({3, 1}) * Poly::constant(BigInt(6));
  ContentPrimitive cs = content_primitive(a);
  CHECK(cs.content == 6);
  CHECK(cs.primitive * Poly::constant(cs.content) == a);
  CHECK(exact_div(a, Poly({3, 1})) == Poly({-1, 0, 1}) * Poly::constant(BigInt(6)));
  CHECK(divides(Poly({-1, 1}), a));
  CHECK_FALSE(divides(Poly({-2, 1}), a));
  Poly g = gcd(Poly({-1, 0, 1}) * Poly({5, 1}), Poly({-1, 0, 1}) * Poly({7, 1}));
  CHECK(g == Poly({-1, 0, 1}));
}

TEST_CASE("resultant and discriminant on known pairs") {
  // Res(x^2-2, x^2-3) = (2-3)^2 = 1; disc(x^2 - x - 1) = 5.
  CHECK(resultant(Poly({-2, 0, 1}), Poly({-3, 0, 1})) == 1);
  CHECK(discriminant(Poly({-1, -1, 1})) == 5);
  CHECK(discriminant(Poly({1, -2, 1})) == 0);  // (x-1)^2
  CHECK(is_squarefree(Poly({-1, -1, 1})));
  CHECK_FALSE(is_squarefree(Poly({1, -2, 1})));
}

TEST_CASE("poly csv parsing round trips") {
  Poly f = parse_poly_csv("1,-3,1");
  CHECK(f == Poly({1, -3, 1}));
  CHECK(parse_poly_csv(poly_to_csv(f)) == f);
  CHECK_THROWS_AS(parse_poly_csv(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_csv("1,,2"), std::invalid_argument);
}

TEST_CASE("to_string renders signs and powers") {
  CHECK(Poly({-1, -16, 0, 1}).to_string() == "x^3 - 16x - 1");
  CHECK(Poly({2, -1}).to_string() == "-x + 2");
  CHECK(Poly::zero().to_string() == "0");
}

TEST_CASE("sturm chain counts and isolates real roots") {
  // (x^2-2)(x^2-3): four real roots.
  Poly f = Poly({-2, 0, 1}) * Poly({-3, 0, 1});
  SturmChain chain(f);
  CHECK(chain.count_in(Rational(0), Rational(2)) == 2);
  CHECK(chain.count_in(Rational(-2), Rational(0)) == 2);
  std::vector<IsolatingInterval> ivs = isolate_real_roots(f);
  CHECK(ivs.size() == 4);
  for (auto& iv : ivs) {
    refine_to_width(chain, iv, Rational(1, 1 << 20));
    CHECK(iv.hi - iv.lo <= Rational(1, 1 << 20));
  }
  // The largest root is sqrt(3) = 1.7320508...
  Rational top = ivs.back().hi;
  CHECK(top * top >= Rational(29, 10));
  CHECK(ivs.back().lo * ivs.back().lo <= 3);
}

TEST_CASE("cauchy bound dominates every real root") {
  Poly f({-1, -16, 0, 1});
  Rational bound = cauchy_root_bound(f);
  for (const IsolatingInterval& iv : isolate_real_roots(f)) {
    CHECK(iv.hi <= bound);
    CHECK(iv.lo >= -bound);
  }
}

TEST_CASE("interval arithmetic basics") {
  RealEnclosure a(Rational(1), Rational(2));
  RealEnclosure b(Rational(3), Rational(4));
  CHECK((a + b).lo == 4);
  CHECK((a + b).hi == 6);
  CHECK((a * b).lo == 3);
  CHECK((a * b).hi == 8);
  RealEnclosure r = reciprocal(b);
  CHECK(r.lo == Rational(1, 4));
  CHECK(r.hi == Rational(1, 3));
  CHECK_THROWS_AS(reciprocal(RealEnclosure(Rational(-1), Rational(1))),
                  std::domain_error);
  RealEnclosure s = sqrt_enclosure(RealEnclosure(Rational(2)), 64);
  CHECK(s.lo * s.lo <= 2);
  CHECK(s.hi * s.hi >= 2);
  CertifiedValue cv = to_certified(a);
  CHECK(cv.value == doctest::Approx(1.5));
  CHECK(cv.radius >= 0.5);
}
