// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "specratio/factor.hpp"
#include "specratio/families.hpp"
#include "specratio/poly_mod.hpp"

using namespace specratio;

namespace {

bool has_factor(const Factorization& fz, const Poly& f, int mult) {
  for (const FactorPart& part : fz.factors) {
    if (part.factor == f && part.multiplicity == mult) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("x^3 - 1 splits into the linear and quadratic parts") {
  Factorization fz = factor_over_z(Poly({-1, 0, 0, 1}));
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.content == 1);
  CHECK(has_factor(fz, Poly({-1, 1}), 1));
  CHECK(has_factor(fz, Poly({1, 1, 1}), 1));
  CHECK(reconstruct(fz) == Poly({-1, 0, 0, 1}));
}

TEST_CASE("multiplicities and content are recovered") {
  // 12 * (x-2)^2 * (x+1)
  Poly f = Poly::constant(BigInt(12)) * Poly({-2, 1}) * Poly({-2, 1}) *
           Poly({1, 1});
  Factorization fz = factor_over_z(f);
  CHECK(fz.content == 12);
  CHECK(has_factor(fz, Poly({-2, 1}), 2));
  CHECK(has_factor(fz, Poly({1, 1}), 1));
  CHECK(reconstruct(fz) == f);
}

TEST_CASE("negative leading coefficient goes into the content") {
  Poly f = Poly({6, 0, -3});  // -3(x^2 - 2)
  Factorization fz = factor_over_z(f);
  CHECK(fz.content == -3);
  CHECK(has_factor(fz, Poly({-2, 0, 1}), 1));
  CHECK(reconstruct(fz) == f);
}

TEST_CASE("squarefree decomposition splits by multiplicity") {
  Poly f = Poly({-1, 1}).pow(3) * Poly({-2, 0, 1});
  auto parts = squarefree_decompose(f);
  bool saw_cube = false, saw_simple = false;
  for (const auto& [g, mult] : parts) {
    if (mult == 3 && g == Poly({-1, 1})) saw_cube = true;
    if (mult == 1 && g == Poly({-2, 0, 1})) saw_simple = true;
  }
  CHECK(saw_cube);
  CHECK(saw_simple);
}

TEST_CASE("certificates name a prime where the factor stays irreducible") {
  Factorization fz = factor_over_z(Poly({-1, -16, 0, 1}));
  REQUIRE(fz.factors.size() == 1);
  const FactorPart& part = fz.factors[0];
  CHECK(part.factor.degree() == 3);
  if (part.certificate.kind == CertificateKind::mod_p) {
    PolyModP reduced = reduce_mod_p(part.factor, part.certificate.prime);
    CHECK(is_irreducible_mod_p(reduced));
  }
  CHECK(irreducible_mod_p_certificate(Poly({1, 0, 4, 1, 4, 0, 1}), 7));
  CHECK_FALSE(irreducible_mod_p_certificate(Poly({-1, 0, 0, 1}), 7));
}

TEST_CASE("degree-1 factors carry the trivial certificate") {
  Factorization fz = factor_over_z(Poly({-5, 1}));
  REQUIRE(fz.factors.size() == 1);
  CHECK(fz.factors[0].certificate.kind == CertificateKind::degree_le_1);
}

TEST_CASE("lifting audit trail is populated for nontrivial factorizations") {
  Poly f = Poly({-2, 0, 1}) * Poly({-3, 0, 1});
  Factorization fz = factor_over_z(f);
  REQUIRE(fz.liftings.size() >= 1);
  const LiftingReport& lift = fz.liftings.front();
  CHECK(is_prime_u64(lift.prime));
  CHECK(lift.exponent >= 1);
  CHECK(lift.modulus > lift.coefficient_bound);
  CHECK(lift.squarefree_input.degree() >= 1);
}

TEST_CASE("the genus3 characteristic polynomial splits as documented") {
  Poly cp = char_poly(genus3_matrix(10));
  Factorization fz = factor_over_z(cp);
  REQUIRE(fz.factors.size() == 3);
  CHECK(has_factor(fz, Poly({-1, 1}), 1));
  CHECK(has_factor(fz, Poly({1, 1, 1}), 1));
  CHECK(has_factor(fz, genus3_sextic(10), 1));
}

TEST_CASE("minimal_poly_of_dominant_root selects the right factor") {
  Poly cp = char_poly(genus3_matrix(10));
  CHECK(minimal_poly_of_dominant_root(cp) == genus3_sextic(10));
  // For the Fibonacci quadratic the input is already minimal.
  CHECK(minimal_poly_of_dominant_root(Poly({-1, -1, 1})) == Poly({-1, -1, 1}));
  // A repeated dominant root still has a well-defined minimal polynomial.
  CHECK(minimal_poly_of_dominant_root(Poly({1, -2, 1})) == Poly({-1, 1}));
  // x^2 - 1 has two roots of equal modulus: no unique dominant root.
  CHECK_THROWS_AS(minimal_poly_of_dominant_root(Poly({-1, 0, 1})),
                  std::domain_error);
}

TEST_CASE("factoring the zero polynomial is rejected") {
  CHECK_THROWS_AS(factor_over_z(Poly::zero()), std::domain_error);
}

TEST_CASE("random construct-then-factor round trips") {
  std::uint64_t state = 0xfac70f5eed;
  auto rand_small = [&](long lo, long hi) {
    return lo + static_cast<long>(splitmix64(state) %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  };
  int done = 0;
  while (done < 25) {
    // Build a product of 1..3 primitive factors of degree 1..2.
    Poly product = Poly::constant(BigInt(1));
    std::vector<Poly> used;
    int nf = static_cast<int>(rand_small(1, 3));
    for (int i = 0; i < nf; ++i) {
      int deg = static_cast<int>(rand_small(1, 2));
      std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = BigInt(rand_small(-9, 9));
      if (c.back() == 0) c.back() = 1;
      Poly cand(std::move(c));
      for (const FactorPart& p : factor_over_z(cand).factors) {
        used.push_back(p.factor);
        for (int m = 0; m < p.multiplicity; ++m) product = product * p.factor;
      }
    }
    Factorization fz = factor_over_z(product);
    Poly rebuilt = reconstruct(fz);
    CHECK(rebuilt == product);
    // Every constructed irreducible appears among the found factors.
    for (const Poly& u : used) {
      bool found = false;
      for (const FactorPart& p : fz.factors) found = found || p.factor == u;
      CHECK(found);
    }
    ++done;
  }
}
