// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "specratio/families.hpp"
#include "specratio/roots.hpp"

using namespace specratio;

TEST_CASE("all_roots certifies the square root of two") {
  RootSet rs = all_roots(Poly({-2, 0, 1}), 64);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.precision_met);
  CHECK(rs.achieved_bits >= 64);
  const RootDisk& top = rs.roots.front();
  CHECK(top.is_real);
  CHECK(std::abs(to_double(top.re) - std::sqrt(2.0)) < 1e-15);
  CHECK(to_double(top.radius) < 1e-15);
  const RootDisk& bottom = rs.roots.back();
  CHECK(std::abs(to_double(bottom.re) + std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("complex pairs come with zero-symmetric imaginary parts") {
  // x^2 + x + 1: roots exp(+-2pi i/3).
  RootSet rs = all_roots(Poly({1, 1, 1}), 64);
  REQUIRE(rs.roots.size() == 2);
  for (const RootDisk& d : rs.roots) {
    CHECK_FALSE(d.is_real);
    CHECK(std::abs(to_double(d.re) + 0.5) < 1e-12);
    CHECK(std::abs(std::abs(to_double(d.im)) - std::sqrt(3.0) / 2) < 1e-12);
    RealEnclosure m = modulus_enclosure(d);
    CHECK(m.lo <= 1);
    CHECK(m.hi >= 1);
  }
}

TEST_CASE("roots sort by modulus, largest first") {
  Poly f = Poly({-1, 1}) * Poly({-3, 1}) * Poly({2, 1});
  RootSet rs = all_roots(f, 64);
  REQUIRE(rs.roots.size() == 3);
  CHECK(to_double(rs.roots[0].re) == doctest::Approx(3.0));
  CHECK(to_double(rs.roots[1].re) == doctest::Approx(-2.0));
  CHECK(to_double(rs.roots[2].re) == doctest::Approx(1.0));
}

TEST_CASE("repeated roots are reported with multiplicity") {
  Poly f = Poly({-1, 1}).pow(2) * Poly({3, 1});
  RootSet rs = all_roots(f, 64);
  bool saw_double = false;
  for (const RootDisk& d : rs.roots) {
    if (d.multiplicity == 2) {
      saw_double = true;
      CHECK(std::abs(to_double(d.re) - 1.0) < 1e-12);
    }
  }
  CHECK(saw_double);
}

TEST_CASE("requested precision scales the certified radii") {
  Poly f = genus3_sextic(10);
  RootSet coarse = all_roots(f, 32);
  RootSet fine = all_roots(f, 160);
  CHECK(fine.achieved_bits >= 160);
  CHECK(fine.roots.front().radius < coarse.roots.front().radius);
}

TEST_CASE("palindromic_reduce halves the degree") {
  // s05 quartic at k=5: x^4 - 15x^3 + 53x^2 - 15x + 1 -> y^2 - 15y + 51.
  Poly q = s05_minimal_poly(5);
  Poly y = palindromic_reduce(q);
  CHECK(y.degree() == 2);
  CHECK(y == s05_reduced_quadratic(5));
  CHECK_THROWS_AS(palindromic_reduce(Poly({1, 2, 3})), std::invalid_argument);
  // Genus-3 sextic reduces to the cubic y^3 - (F2k+3)y - F2k+3.
  Poly c = palindromic_reduce(genus3_sextic(10));
  CHECK(c.degree() == 3);
  CHECK(c == Poly(std::initializer_list<long>{-28657, -6768, 0, 1}));
}

TEST_CASE("lifted palindromic roots match direct root finding") {
  Poly q = s05_minimal_poly(10);
  RootSet direct = all_roots(q, 96);
  RootSet ys = all_roots(palindromic_reduce(q), 96);
  const RootDisk& y_top = ys.roots.front();
  REQUIRE(y_top.is_real);
  LiftedRoots lifted = lift_palindromic_roots(
      RealEnclosure(y_top.re - y_top.radius, y_top.re + y_top.radius), 96);
  REQUIRE(lifted.real);
  // The larger lifted value equals the quartic's dominant root.
  double top_direct = to_double(direct.roots.front().re);
  double top_lifted = to_double(lifted.plus.lo);
  CHECK(std::abs(top_direct - top_lifted) < 1e-12);
  // And the lift inverts: x + 1/x recovers y.
  double x = top_lifted;
  CHECK(x + 1 / x == doctest::Approx(to_double(y_top.re)).epsilon(1e-12));
  // Small |y| lifts to a unit-modulus conjugate pair.
  LiftedRoots unit = lift_palindromic_roots(RealEnclosure(Rational(1)), 96);
  CHECK_FALSE(unit.real);
  RealEnclosure mod2 = unit.re * unit.re + unit.im_abs * unit.im_abs;
  CHECK(mod2.lo <= 1);
  CHECK(mod2.hi >= 1);
}

TEST_CASE("spectral ratio of the Fibonacci quadratic is phi squared") {
  RatioResult r = spectral_ratio_of_poly(Poly({-1, -1, 1}), 96);
  CHECK(r.status == RatioStatus::strict);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(to_double(r.ratio.lo) == doctest::Approx(phi * phi).epsilon(1e-12));
  CHECK(r.zero_root_multiplicity == 0);
}

TEST_CASE("equal-modulus pairs are reported as ties") {
  RatioResult r = spectral_ratio_of_poly(Poly({-1, 0, 1}), 64);
  CHECK(r.status == RatioStatus::tie_equal_modulus);
}

TEST_CASE("zero roots are deflated before the ratio") {
  // x^2 (x-1)(x-2): the ratio is 2/1 after dropping the zero roots.
  RatioResult r = spectral_ratio_of_poly(Poly({0, 0, 2, -3, 1}), 64);
  CHECK(r.zero_root_multiplicity == 2);
  CHECK(r.status == RatioStatus::strict);
  CHECK(to_double(r.ratio.lo) == doctest::Approx(2.0).epsilon(1e-12));
  // A pure power of x has no ratio at all.
  CHECK_THROWS_AS(spectral_ratio_of_poly(Poly({0, 0, -2, 1}), 64),
                  std::domain_error);
}

TEST_CASE("viete cubic roots agree with all_roots on the genus3 cubic") {
  Poly c = palindromic_reduce(genus3_sextic(10));
  std::vector<double> a = viete_cubic_roots(c);
  RootSet rs = all_roots(c, 96);
  REQUIRE(a.size() == 3);
  REQUIRE(rs.roots.size() == 3);
  // Compare the sorted real parts.
  std::vector<double> b;
  for (const auto& d : rs.roots) b.push_back(to_double(d.re));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (int i = 0; i < 3; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(all_roots(Poly::zero(), 64), std::domain_error);
  CHECK_THROWS_AS(all_roots(Poly::constant(BigInt(3)), 64), std::domain_error);
}
