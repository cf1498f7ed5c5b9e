// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "specratio/dynamics.hpp"
#include "specratio/factor.hpp"
#include "specratio/families.hpp"
#include "specratio/matrix.hpp"
#include "specratio/poly.hpp"
#include "specratio/report.hpp"
#include "specratio/roots.hpp"
#include "specratio/spectral.hpp"
#include "specratio/verify.hpp"

namespace specratio {

// JSON renderings (2-space indent, keys sorted by the serializer). Exact
// integers and rationals are emitted as decimal strings so nothing is
// narrowed; measured quantities stay doubles.
std::string poly_json(const Poly& f);          // {"coeffs":["1","-3","1"]}
std::string mat_json(const Mat& m);            // {"rows":[["0","1"],...]}
std::string generator_set_json(const GeneratorSet& gens);
std::string factorization_json(const Factorization& fz);
std::string rootset_json(const RootSet& rs);
std::string spectral_report_json(const SpectralReport& rep);
std::string verify_report_json(const VerifyReport& rep);
std::string family_instance_json(const FamilyInstance& inst);
std::string catalog_json();
std::string experiment_json(const ExperimentReport& rep);
std::string north_south_json(const NorthSouthReport& rep);
std::string iterate_summary_json(const IterationTrace& trace);

// Inverse directions used by the command-line tools. All throw
// std::invalid_argument with a position/description on malformed input.
Poly poly_from_json_text(const std::string& text);
Mat mat_from_json_text(const std::string& text);
GeneratorSet generator_set_from_json_text(const std::string& text);

// Inline matrix syntax: rows split by ';', entries by ','.
Mat parse_matrix_csv(const std::string& text);

// Whole-file helpers. Writes go through a sibling temp file followed by a
// rename, so readers never observe a half-written report.
std::string read_text_file(const std::string& path);
void write_text_file_atomic(const std::string& path,
                            const std::string& content);

}  // namespace specratio
