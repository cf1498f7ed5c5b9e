// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: characteristic polynomials, exact
// factorization, certified root isolation, spectral-ratio reports, and
// projective iteration.

#include <benchmark/benchmark.h>

#include "specratio/dynamics.hpp"
#include "specratio/factor.hpp"
#include "specratio/families.hpp"
#include "specratio/roots.hpp"
#include "specratio/spectral.hpp"
#include "specratio/verify.hpp"

using namespace specratio;

namespace {

void BM_CharPolyGenus3(benchmark::State& state) {
  const Mat m = genus3_matrix(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_poly(m));
  }
}
BENCHMARK(BM_CharPolyGenus3)->Arg(10)->Arg(18)->Arg(26);

void BM_FactorCharPoly(benchmark::State& state) {
  const Poly f = char_poly(genus3_matrix(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_over_z(f));
  }
}
BENCHMARK(BM_FactorCharPoly)->Arg(10)->Arg(18);

void BM_AllRootsSextic(benchmark::State& state) {
  const Poly f = genus3_sextic(10);
  const long bits = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_roots(f, bits));
  }
}
BENCHMARK(BM_AllRootsSextic)->Arg(64)->Arg(128)->Arg(256);

void BM_SpectralReport(benchmark::State& state) {
  const Poly f = char_poly(genus3_matrix(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_report_of_poly(f));
  }
}
BENCHMARK(BM_SpectralReport)->Arg(10)->Arg(18);

void BM_RatioResultant(benchmark::State& state) {
  const Poly f = s05_minimal_poly(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_resultant(f));
  }
}
BENCHMARK(BM_RatioResultant)->Arg(5)->Arg(50);

void BM_ProjectIterate(benchmark::State& state) {
  const Mat m = genus3_matrix(10);
  const Ray v0 = uniform_ray(m.dim());
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_iterate(m, v0, steps));
  }
}
BENCHMARK(BM_ProjectIterate)->Arg(100)->Arg(400);

void BM_VerifyChain(benchmark::State& state) {
  const std::vector<long> ks = {10, 18};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_family(FamilyName::genus3, ks));
  }
}
BENCHMARK(BM_VerifyChain);

}  // namespace

BENCHMARK_MAIN();
