// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "specratio/families.hpp"

namespace specratio {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct KReport {
  long k = 0;
  std::vector<CheckResult> checks;
  bool pass = false;
};

// Everything the verifier certified for one family at the given
// parameters, plus cross-parameter checks (e.g. ratio monotonicity).
struct VerifyReport {
  std::string family;
  std::vector<long> ks;
  std::vector<KReport> per_k;
  std::vector<CheckResult> family_checks;
  bool pass = false;
  double seconds = 0.0;
};

// Runs the family's full certification chain at every parameter:
//   genus3     characteristic polynomial identity, factor split, mod-7
//              irreducibility certificate, ratio envelope (exact rational
//              comparisons), palindromic reduction cross-check, root
//              geometry, and the Liouville gap floor
//   s05        palindromic reduction, quadratic-formula cross-check,
//              ratio envelope, irreducibility, gap floor
//   gl3        characteristic polynomial, determinant, dominant factor,
//              ratio envelope, gap floor
//   quadratic  ratio floor phi^4, closed-form cross-check, and
//              cross-parameter monotonicity
// Throws std::invalid_argument when a parameter fails the family's
// validity predicate (the caller treats that as a usage error).
VerifyReport verify_family(FamilyName name, const std::vector<long>& ks);

}  // namespace specratio
