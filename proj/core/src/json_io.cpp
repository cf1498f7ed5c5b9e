// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "specratio/numeric.hpp"

namespace specratio {

namespace {

using nlohmann::json;

json poly_obj(const Poly& f) {
  json coeffs = json::array();
  for (const BigInt& c : f.coeffs()) coeffs.push_back(c.get_str());
  return json{{"coeffs", coeffs}};
}

json mat_obj(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      row.push_back(m.at(i, j).get_str());
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", rows}};
}

json certified_obj(const CertifiedValue& v) {
  return json{{"value", v.value}, {"radius", v.radius}};
}

json enclosure_obj(const RealEnclosure& e) {
  return json{{"lo", to_double(e.lo)},
              {"hi", to_double(e.hi)},
              {"lo_exact", e.lo.get_str()},
              {"hi_exact", e.hi.get_str()}};
}

json factorization_obj(const Factorization& fz) {
  json factors = json::array();
  for (const FactorPart& part : fz.factors) {
    json cert{{"kind", certificate_kind_name(part.certificate.kind)}};
    if (part.certificate.kind == CertificateKind::mod_p) {
      cert["prime"] = part.certificate.prime;
    }
    factors.push_back(json{{"coeffs", poly_obj(part.factor)["coeffs"]},
                           {"multiplicity", part.multiplicity},
                           {"certificate", std::move(cert)}});
  }
  json liftings = json::array();
  for (const LiftingReport& lift : fz.liftings) {
    liftings.push_back(
        json{{"squarefree_input", poly_obj(lift.squarefree_input)["coeffs"]},
             {"prime", lift.prime},
             {"exponent", lift.exponent},
             {"modulus", lift.modulus.get_str()},
             {"coefficient_bound", lift.coefficient_bound.get_str()}});
  }
  return json{{"content", fz.content.get_str()},
              {"factors", std::move(factors)},
              {"liftings", std::move(liftings)}};
}

json spectral_obj(const SpectralReport& rep) {
  json out{{"source", report_source_name(rep.source)},
           {"minimal_poly", poly_obj(rep.minimal_poly)},
           {"dilatation", certified_obj(rep.dilatation)},
           {"second_modulus", certified_obj(rep.second_modulus)},
           {"ratio_defined", rep.ratio_defined},
           {"height_bits", rep.height_bits},
           {"height_max_coeff", rep.minimal_poly.max_abs_coeff().get_str()},
           {"certificates", factorization_obj(rep.certificates)}};
  if (rep.ratio_defined) {
    out["ratio"] = to_certified(rep.ratio).value;
    out["ratio_interval"] = enclosure_obj(rep.ratio);
  }
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

json check_obj(const CheckResult& c) {
  return json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string("missing JSON key '") + key +
                                "'");
  }
  return *it;
}

BigInt bigint_from(const json& v) {
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  if (v.is_number_integer()) {
    return parse_bigint(std::to_string(v.get<long long>()));
  }
  throw std::invalid_argument(
      "expected an integer or a decimal string, got: " + v.dump());
}

Poly poly_from(const json& j) {
  const json& coeffs = j.is_array() ? j : require(j, "coeffs");
  if (!coeffs.is_array()) {
    throw std::invalid_argument("'coeffs' must be an array");
  }
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (const json& v : coeffs) c.push_back(bigint_from(v));
  return Poly(std::move(c));
}

Mat mat_from(const json& j) {
  const json& rows = j.is_array() ? j : require(j, "rows");
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument("'rows' must be a nonempty array");
  }
  std::vector<std::vector<BigInt>> entries;
  entries.reserve(rows.size());
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) {
      throw std::invalid_argument("matrix rows must be square");
    }
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (const json& v : row) r.push_back(bigint_from(v));
    entries.push_back(std::move(r));
  }
  return Mat::from_rows(std::move(entries));
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string poly_json(const Poly& f) { return dump(poly_obj(f)); }
std::string mat_json(const Mat& m) { return dump(mat_obj(m)); }

std::string generator_set_json(const GeneratorSet& gens) {
  json g = json::object();
  for (const Generator& gen : gens.generators()) {
    g[gen.label] = mat_obj(gen.matrix);
  }
  return dump(json{{"dimension", gens.dimension()},
                   {"generators", std::move(g)},
                   {"inverse_closed", gens.inverse_closed()}});
}

std::string factorization_json(const Factorization& fz) {
  return dump(factorization_obj(fz));
}

std::string rootset_json(const RootSet& rs) {
  json roots = json::array();
  for (const RootDisk& d : rs.roots) {
    roots.push_back(json{{"re", to_double(d.re)},
                         {"im", to_double(d.im)},
                         {"radius", to_double(d.radius)},
                         {"mult", d.multiplicity},
                         {"is_real", d.is_real}});
  }
  return dump(json{{"poly", poly_obj(rs.poly)},
                   {"roots", std::move(roots)},
                   {"precision_bits", rs.precision_bits},
                   {"achieved_bits", rs.achieved_bits},
                   {"precision_met", rs.precision_met}});
}

std::string spectral_report_json(const SpectralReport& rep) {
  return dump(spectral_obj(rep));
}

std::string verify_report_json(const VerifyReport& rep) {
  json per_k = json::array();
  for (const KReport& kr : rep.per_k) {
    json checks = json::array();
    for (const CheckResult& c : kr.checks) checks.push_back(check_obj(c));
    per_k.push_back(
        json{{"k", kr.k}, {"pass", kr.pass}, {"checks", std::move(checks)}});
  }
  json family_checks = json::array();
  for (const CheckResult& c : rep.family_checks) {
    family_checks.push_back(check_obj(c));
  }
  return dump(json{{"family", rep.family},
                   {"ks", rep.ks},
                   {"per_k", std::move(per_k)},
                   {"family_checks", std::move(family_checks)},
                   {"pass", rep.pass},
                   {"seconds", rep.seconds}});
}

std::string family_instance_json(const FamilyInstance& inst) {
  json out{{"family", family_name_string(inst.name)},
           {"k", inst.k},
           {"valid", inst.valid},
           {"bound_description", inst.bound_description},
           {"bound_value", inst.bound_value},
           {"word_length", inst.word_length}};
  if (!inst.valid) out["invalid_reason"] = inst.invalid_reason;
  if (inst.matrix.has_value()) out["matrix"] = mat_obj(*inst.matrix);
  if (inst.minimal_poly.has_value()) {
    out["minimal_poly"] = poly_obj(*inst.minimal_poly);
  }
  return dump(out);
}

std::string catalog_json() {
  json cells = json::array();
  for (const CatalogEntry& e : behavior_catalog()) {
    json cell{{"genus", e.genus},
              {"punctures", e.punctures},
              {"status", e.status},
              {"note", e.note}};
    if (!e.family.empty()) cell["family"] = e.family;
    if (!e.word.empty()) cell["word"] = e.word;
    cells.push_back(std::move(cell));
  }
  return dump(json{{"legend",
                    json{{"N", "no pseudo-Anosov maps"},
                         {"B", "ratios bounded away from one"},
                         {"P<=", "some family converges polynomially"},
                         {"E", "some family converges exponentially"}}},
                   {"cells", std::move(cells)}});
}

std::string experiment_json(const ExperimentReport& rep) {
  json points = json::array();
  for (const ExperimentPoint& pt : rep.points) {
    points.push_back(json{{"family", pt.family},
                          {"k", pt.k},
                          {"word_length", pt.word_length},
                          {"sigma", pt.sigma},
                          {"neg_log2_gap", pt.neg_log2_gap}});
  }
  auto line_obj = [](const RegressionLine& line) {
    return json{{"slope", line.slope},
                {"intercept", line.intercept},
                {"residuals", line.residuals}};
  };
  return dump(json{{"points", std::move(points)},
                   {"vs_k", line_obj(rep.vs_k)},
                   {"vs_word_length", line_obj(rep.vs_word_length)},
                   {"skipped_invalid", rep.skipped_invalid}});
}

std::string north_south_json(const NorthSouthReport& rep) {
  return dump(json{{"trials", rep.trials},
                   {"power_checked", rep.power_checked},
                   {"max_limit_spread", rep.max_limit_spread},
                   {"eigen_residual", rep.eigen_residual},
                   {"lambda", rep.lambda},
                   {"limit", rep.limit.coords},
                   {"pass", rep.pass}});
}

std::string iterate_summary_json(const IterationTrace& trace) {
  return dump(json{{"steps", trace.steps},
                   {"converged", trace.converged},
                   {"transient_steps", trace.transient_steps},
                   {"fitted_rate", trace.fitted_rate},
                   {"start", trace.start.coords},
                   {"limit", trace.limit.coords}});
}

Poly poly_from_json_text(const std::string& text) {
  return poly_from(parse(text));
}

Mat mat_from_json_text(const std::string& text) {
  return mat_from(parse(text));
}

GeneratorSet generator_set_from_json_text(const std::string& text) {
  const json j = parse(text);
  const json& gens = require(j, "generators");
  if (!gens.is_object() || gens.empty()) {
    throw std::invalid_argument("'generators' must be a nonempty object");
  }
  std::vector<Generator> list;
  list.reserve(gens.size());
  for (auto it = gens.begin(); it != gens.end(); ++it) {
    list.push_back(Generator{it.key(), mat_from(it.value())});
  }
  const std::size_t dim = require(j, "dimension").get<std::size_t>();
  const bool inverse_closed = require(j, "inverse_closed").get<bool>();
  return GeneratorSet(dim, std::move(list), inverse_closed);
}

Mat parse_matrix_csv(const std::string& text) {
  std::vector<std::vector<BigInt>> rows;
  std::stringstream row_stream(text);
  std::string row;
  while (std::getline(row_stream, row, ';')) {
    std::vector<BigInt> entries;
    std::stringstream entry_stream(row);
    std::string entry;
    while (std::getline(entry_stream, entry, ',')) {
      std::size_t a = entry.find_first_not_of(" \t");
      std::size_t b = entry.find_last_not_of(" \t");
      if (a == std::string::npos) {
        throw std::invalid_argument("empty matrix entry in '" + row + "'");
      }
      entries.push_back(parse_bigint(entry.substr(a, b - a + 1)));
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) {
    throw std::invalid_argument("empty matrix text");
  }
  for (const auto& r : rows) {
    if (r.size() != rows.size()) {
      throw std::invalid_argument(
          "matrix text must be square: rows split by ';', entries by ','");
    }
  }
  return Mat::from_rows(std::move(rows));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file_atomic(const std::string& path,
                            const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
      throw std::runtime_error("short write to '" + tmp + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

}  // namespace specratio
