// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "specratio/families.hpp"
#include "specratio/roots.hpp"
#include "specratio/verify.hpp"

using namespace specratio;

TEST_CASE("family names round trip") {
  for (FamilyName n : {FamilyName::genus3, FamilyName::s05, FamilyName::gl3,
                       FamilyName::quadratic}) {
    CHECK(parse_family_name(family_name_string(n)) == n);
  }
  CHECK_THROWS_AS(parse_family_name("nope"), std::invalid_argument);
}

TEST_CASE("genus3 validity wants k >= 7 and k = 2 mod 8") {
  CHECK(family_validity(FamilyName::genus3, 10).valid);
  CHECK(family_validity(FamilyName::genus3, 18).valid);
  CHECK(family_validity(FamilyName::genus3, 26).valid);
  CHECK_FALSE(family_validity(FamilyName::genus3, 2).valid);
  CHECK_FALSE(family_validity(FamilyName::genus3, 9).valid);
  CHECK_FALSE(family_validity(FamilyName::genus3, 16).valid);
  FamilyValidity v = family_validity(FamilyName::genus3, 9);
  CHECK(v.reason.find("mod 8") != std::string::npos);
}

TEST_CASE("s05 validity rejects square discriminants") {
  CHECK(family_validity(FamilyName::s05, 5).valid);
  CHECK(family_validity(FamilyName::s05, 7).valid);
  CHECK(family_validity(FamilyName::s05, 10000).valid);
  // 4k+1 square: k = 6 -> 25, k = 12 -> 49, k = 20 -> 81.
  CHECK_FALSE(family_validity(FamilyName::s05, 6).valid);
  CHECK_FALSE(family_validity(FamilyName::s05, 12).valid);
  CHECK_FALSE(family_validity(FamilyName::s05, 20).valid);
  CHECK_FALSE(family_validity(FamilyName::s05, 4).valid);
  CHECK(family_validity(FamilyName::s05, 6).reason.find("perfect square") !=
        std::string::npos);
}

TEST_CASE("gl3 and quadratic validity floors") {
  CHECK(family_validity(FamilyName::gl3, 1).valid);
  CHECK_FALSE(family_validity(FamilyName::gl3, 0).valid);
  CHECK(family_validity(FamilyName::quadratic, 3).valid);
  CHECK_FALSE(family_validity(FamilyName::quadratic, 2).valid);
}

TEST_CASE("genus3 characteristic polynomial identity") {
  for (long k : {10L, 18L}) {
    Poly cp = char_poly(genus3_matrix(k));
    CHECK(cp == genus3_expected_charpoly(k));
    CHECK(cp == Poly({-1, 0, 0, 1}) * genus3_sextic(k));
  }
}

TEST_CASE("genus3 sextic coefficients carry the Fibonacci data") {
  Poly s = genus3_sextic(10);
  CHECK(s.degree() == 6);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(2) == -fibonacci(20));
  CHECK(s.coeff(3) == -fibonacci(23));
  CHECK(s.coeff(4) == -fibonacci(20));
  CHECK(s.coeff(6) == 1);
  CHECK(s == s.reversed());  // palindromic
}

TEST_CASE("genus3 bounds are positive and shrink with k") {
  Genus3Bounds b10 = genus3_bounds(10);
  Genus3Bounds b18 = genus3_bounds(18);
  CHECK(b10.fib_bound == 1 + Rational(6) / Rational(55));
  CHECK(b18.fib_bound == 1 + Rational(6) / Rational(2584));
  CHECK(b18.fib_bound < b10.fib_bound);
  CHECK(b10.phi_bound.lo > 1);
  CHECK(b18.phi_bound.hi < b10.phi_bound.lo);
  CHECK_THROWS_AS(genus3_bounds(9), std::domain_error);
}

TEST_CASE("golden ratio enclosure is tight and correct") {
  RealEnclosure phi = golden_ratio(96);
  CHECK(phi.lo * phi.lo <= phi.lo + 1);
  CHECK(phi.hi * phi.hi >= phi.hi + 1);
  CHECK(phi.width() <= Rational(1, BigInt(1) << 90));
}

TEST_CASE("s05 polynomials have the documented shape") {
  Poly q = s05_minimal_poly(5);
  CHECK(q == Poly({1, -15, 53, -15, 1}));
  CHECK(q == q.reversed());
  CHECK(s05_reduced_quadratic(5) == Poly({51, -15, 1}));
  // Reduction consistency for a large parameter.
  CHECK(palindromic_reduce(s05_minimal_poly(50)) == s05_reduced_quadratic(50));
}

TEST_CASE("gl3 matrices and their characteristic polynomials") {
  CHECK(char_poly(gl3_matrix(1)) == Poly({-1, -2, 0, 1}));
  CHECK(char_poly(gl3_matrix(4)) == Poly({-1, -16, 0, 1}));
  CHECK(char_poly(gl3_matrix(20)) == gl3_expected_charpoly(20));
  CHECK(gl3_matrix(4).is_nonnegative());
}

TEST_CASE("quadratic_floor_poly is x^2 - tx + 1") {
  CHECK(quadratic_floor_poly(3) == Poly({1, -3, 1}));
  CHECK(quadratic_floor_poly(7) == Poly({1, -7, 1}));
}

TEST_CASE("parse_k_list accepts singletons, lists, ranges") {
  CHECK(parse_k_list("10") == std::vector<long>{10});
  CHECK(parse_k_list("10,18,26") == std::vector<long>{10, 18, 26});
  CHECK(parse_k_list("5..9") == std::vector<long>{5, 6, 7, 8, 9});
  CHECK_THROWS_AS(parse_k_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_k_list("9..5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_k_list("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_k_list("1,,2"), std::invalid_argument);
}

TEST_CASE("instances carry matrices only for matrix families") {
  FamilyInstance g = make_instance(FamilyName::genus3, 10);
  CHECK(g.valid);
  CHECK(g.matrix.has_value());
  CHECK(g.minimal_poly.has_value());
  CHECK(g.word_length == 22);
  FamilyInstance s = make_instance(FamilyName::s05, 5);
  CHECK_FALSE(s.matrix.has_value());
  CHECK(s.minimal_poly.has_value());
  FamilyInstance bad = make_instance(FamilyName::genus3, 9);
  CHECK_FALSE(bad.valid);
  CHECK_FALSE(bad.invalid_reason.empty());
}

TEST_CASE("behavior catalog covers genus 0..3 and 0..7 punctures") {
  const std::vector<CatalogEntry>& cat = behavior_catalog();
  CHECK(cat.size() == 32);
  CHECK(catalog_status(0, 0) == "N");
  CHECK(catalog_status(0, 3) == "N");
  CHECK(catalog_status(0, 4) == "B");
  CHECK(catalog_status(1, 0) == "B");
  CHECK(catalog_status(1, 1) == "B");
  CHECK(catalog_status(0, 5) == "P<=");
  CHECK(catalog_status(1, 2) == "P<=");
  CHECK(catalog_status(2, 0) == "P<=");
  CHECK(catalog_status(0, 7) == "E");
  CHECK(catalog_status(3, 0) == "E");
  CHECK(catalog_status(2, 1) == "E");
  CHECK_THROWS_AS(catalog_status(4, 0), std::out_of_range);
  CHECK_THROWS_AS(catalog_status(0, 8), std::out_of_range);
  // Exponential cells carry a witness word where one is known.
  for (const CatalogEntry& e : cat) {
    if (e.genus == 3 && e.punctures == 0) {
      CHECK(e.word.find("k") != std::string::npos);
    }
  }
}

TEST_CASE("verify_family passes on valid parameters") {
  VerifyReport rep = verify_family(FamilyName::quadratic, {3, 4, 5, 6});
  CHECK(rep.pass);
  CHECK(rep.per_k.size() == 4);
  for (const KReport& kr : rep.per_k) {
    CHECK(kr.pass);
    CHECK(kr.checks.size() >= 2);
  }
  CHECK_FALSE(rep.family_checks.empty());
  CHECK(rep.seconds >= 0.0);
}

TEST_CASE("verify_family rejects invalid parameters with reasons") {
  CHECK_THROWS_WITH_AS(verify_family(FamilyName::s05, {6}),
                       doctest::Contains("perfect square"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(verify_family(FamilyName::genus3, {9}),
                       doctest::Contains("mod 8"), std::invalid_argument);
  // Mixed valid/invalid k also rejects, listing every offender.
  CHECK_THROWS_AS(verify_family(FamilyName::genus3, {10, 9}),
                  std::invalid_argument);
}

TEST_CASE("verify chains for the small matrix families") {
  VerifyReport gl3 = verify_family(FamilyName::gl3, {1, 4, 8});
  CHECK(gl3.pass);
  VerifyReport s05 = verify_family(FamilyName::s05, {5, 7, 10});
  CHECK(s05.pass);
}
