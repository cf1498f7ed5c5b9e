// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "specratio/factor.hpp"
#include "specratio/interval.hpp"
#include "specratio/poly.hpp"

namespace specratio {

enum class ReportSource { poly, matrix, family };

inline std::string report_source_name(ReportSource s) {
  switch (s) {
    case ReportSource::poly:
      return "poly";
    case ReportSource::matrix:
      return "matrix";
    case ReportSource::family:
      return "family";
  }
  return "unknown";
}

// Result of a full spectral-ratio analysis. The ratio enclosure is exact
// rational arithmetic end to end; dilatation and second_modulus are the
// certified moduli of the two dominant roots of minimal_poly. When the
// ratio is undefined (fewer than two roots available) ratio_defined is
// false, ratio holds the placeholder [1, 1], and note says why.
struct SpectralReport {
  ReportSource source = ReportSource::poly;
  Poly minimal_poly;
  CertifiedValue dilatation;
  CertifiedValue second_modulus;
  RealEnclosure ratio{Rational(1), Rational(1)};
  bool ratio_defined = false;
  double height_bits = 0.0;
  Factorization certificates;  // factorization evidence for the input poly
  std::string note;
};

// Height of an algebraic number, reported in bits together with the
// primitive integer polynomial it was measured on.
struct HeightValue {
  double value = 0.0;
  Poly of;
};

}  // namespace specratio
