// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: family verification, polynomial and matrix
// utilities, projective iteration, and word sampling. Exit codes:
//   0  success
//   1  verification or convergence failure (reports still written)
//   2  usage or input error

#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "specratio/dynamics.hpp"
#include "specratio/families.hpp"
#include "specratio/factor.hpp"
#include "specratio/json_io.hpp"
#include "specratio/poly_mod.hpp"
#include "specratio/roots.hpp"
#include "specratio/spectral.hpp"
#include "specratio/verify.hpp"

namespace {

using namespace specratio;

// Flags shared across subcommands; CLI11 binds into this one bag.
struct Options {
  std::string family;
  std::string k;
  std::string poly;
  std::string matrix;
  std::string gens;
  std::string out;
  long steps = 200;
  long count = 100;
  std::string length;
  std::uint64_t seed = 0;
  long bits = kDefaultPrecisionBits;
  std::uint64_t mod = 0;
  bool strict = false;
};

std::string trimmed(const std::string& s) {
  const std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Arguments may name a file or carry the value inline.
std::string load_arg(const std::string& arg) {
  std::ifstream probe(arg);
  if (probe.good()) return read_text_file(arg);
  return arg;
}

Poly parse_poly_arg(const std::string& arg) {
  const std::string text = trimmed(load_arg(arg));
  if (text.empty()) throw std::invalid_argument("empty polynomial input");
  if (text.front() == '{' || text.front() == '[') {
    return poly_from_json_text(text);
  }
  return parse_poly_csv(text);
}

Mat parse_mat_arg(const std::string& arg) {
  const std::string text = trimmed(load_arg(arg));
  if (text.empty()) throw std::invalid_argument("empty matrix input");
  if (text.front() == '{') return mat_from_json_text(text);
  return parse_matrix_csv(text);
}

// Print to stdout, and mirror to --out when given. Used for every JSON
// report so failures still leave the report on disk.
void emit(const std::string& text, const std::string& out) {
  std::fputs(text.c_str(), stdout);
  if (!out.empty()) write_text_file_atomic(out, text);
}

long single_k(const std::string& spec_text) {
  const std::vector<long> ks = parse_k_list(spec_text);
  if (ks.size() != 1) {
    throw std::invalid_argument("expected exactly one k, got '" + spec_text +
                                "'");
  }
  return ks.front();
}

int cmd_verify(const Options& opt) {
  const FamilyName name = parse_family_name(opt.family);
  const VerifyReport rep = verify_family(name, parse_k_list(opt.k));
  emit(verify_report_json(rep), opt.out);
  return rep.pass ? 0 : 1;
}

int cmd_family(const Options& opt) {
  const FamilyName name = parse_family_name(opt.family);
  const std::vector<long> ks = parse_k_list(opt.k);
  if (ks.size() == 1) {
    emit(family_instance_json(make_instance(name, ks.front())), opt.out);
    return 0;
  }
  std::string doc = "[";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    std::string one = family_instance_json(make_instance(name, ks[i]));
    if (!one.empty() && one.back() == '\n') one.pop_back();
    doc += (i ? ",\n" : "\n") + one;
  }
  doc += "\n]\n";
  emit(doc, opt.out);
  return 0;
}

int cmd_catalog(const Options& opt) {
  emit(catalog_json(), opt.out);
  return 0;
}

int cmd_charpoly(const Options& opt) {
  const Mat m = parse_mat_arg(opt.matrix);
  emit(poly_json(char_poly(m)), opt.out);
  return 0;
}

int cmd_factor(const Options& opt) {
  const Poly f = parse_poly_arg(opt.poly);
  emit(factorization_json(factor_over_z(f)), opt.out);
  return 0;
}

int cmd_roots(const Options& opt) {
  const Poly f = parse_poly_arg(opt.poly);
  emit(rootset_json(all_roots(f, opt.bits)), opt.out);
  return 0;
}

int cmd_specratio(const Options& opt) {
  SpectralReport rep;
  if (!opt.poly.empty()) {
    rep = spectral_report_of_poly(parse_poly_arg(opt.poly), opt.bits);
  } else if (!opt.matrix.empty()) {
    rep = spectral_ratio_of_matrix(parse_mat_arg(opt.matrix), opt.bits);
  } else {
    throw std::invalid_argument("specratio needs --poly or --matrix");
  }
  emit(spectral_report_json(rep), opt.out);
  return 0;
}

int cmd_reduce(const Options& opt) {
  if (!is_prime_u64(opt.mod)) {
    throw std::invalid_argument("--mod must be a prime");
  }
  const PolyModP r = reduce_mod_p(parse_poly_arg(opt.poly), opt.mod);
  std::string line;
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
    if (i) line += ",";
    line += std::to_string(r.coeffs()[i]);
  }
  line += "\n";
  emit(line, opt.out);
  return 0;
}

int cmd_iterate(const Options& opt) {
  Mat m = [&] {
    if (!opt.matrix.empty()) return parse_mat_arg(opt.matrix);
    if (opt.family.empty()) {
      throw std::invalid_argument("iterate needs --matrix or --family/--k");
    }
    const FamilyInstance inst =
        make_instance(parse_family_name(opt.family), single_k(opt.k));
    if (!inst.valid) throw std::invalid_argument(inst.invalid_reason);
    if (!inst.matrix.has_value()) {
      throw std::invalid_argument("family '" + opt.family +
                                  "' has no matrix model");
    }
    return *inst.matrix;
  }();
  const IterationTrace trace =
      project_iterate(m, uniform_ray(m.dim()), opt.steps);
  const std::string csv_path = opt.out.empty() ? "iterate.csv" : opt.out;
  write_text_file_atomic(csv_path, trace_csv(trace));
  std::fputs(iterate_summary_json(trace).c_str(), stdout);
  std::fprintf(stderr,
               "iterate: steps=%d converged=%s transient=%d rate=%.6f "
               "trace=%s\n",
               trace.steps, trace.converged ? "yes" : "no",
               trace.transient_steps, trace.fitted_rate, csv_path.c_str());
  if (opt.strict && !trace.converged) return 1;
  return 0;
}

int cmd_sample(const Options& opt) {
  if (opt.gens.empty()) throw std::invalid_argument("sample needs --gens");
  const GeneratorSet gens = generator_set_from_json_text(load_arg(opt.gens));
  const std::vector<long> raw = parse_k_list(opt.length);
  std::vector<int> lengths(raw.begin(), raw.end());
  const std::vector<SampleRecord> records =
      sample_words(gens, lengths, static_cast<int>(opt.count), opt.seed);
  const std::string base = opt.out.empty() ? "samples" : opt.out;
  write_text_file_atomic(base + ".csv", records_csv(records));
  write_text_file_atomic(base + "_quartiles.csv",
                         summaries_csv(summarize_samples(records)));
  long skipped = 0;
  for (const SampleRecord& r : records) skipped += r.skipped() ? 1 : 0;
  std::fprintf(stderr, "sample: rows=%zu skipped=%ld files=%s.csv,%s\n",
               records.size(), skipped, base.c_str(),
               (base + "_quartiles.csv").c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral-ratio toolkit for integer matrices and polynomials"};
  app.require_subcommand(1);
  Options opt;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write the report to this file");
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a family's full certified check chain");
  verify->add_option("--family", opt.family, "Family name")->required();
  verify->add_option("--k", opt.k, "Parameter list: '10', '10,18', '5..9'")
      ->required();
  add_out(verify);

  CLI::App* family = app.add_subcommand(
      "family", "Emit family instances (matrix, minimal polynomial, bounds)");
  family->add_option("--family", opt.family, "Family name")->required();
  family->add_option("--k", opt.k, "Parameter list")->required();
  add_out(family);

  CLI::App* catalog = app.add_subcommand(
      "catalog", "Surface-by-surface convergence behavior table");
  add_out(catalog);

  CLI::App* tools =
      app.add_subcommand("tools", "Polynomial and matrix utilities");
  tools->require_subcommand(1);

  CLI::App* charpoly =
      tools->add_subcommand("charpoly", "Characteristic polynomial");
  charpoly->add_option("--matrix", opt.matrix, "Matrix (file, JSON, or CSV)")
      ->required();
  add_out(charpoly);

  CLI::App* factor =
      tools->add_subcommand("factor", "Factor over the integers");
  factor->add_option("--poly", opt.poly, "Polynomial (file, JSON, or list)")
      ->required();
  add_out(factor);

  CLI::App* roots = tools->add_subcommand("roots", "Certified complex roots");
  roots->add_option("--poly", opt.poly, "Polynomial")->required();
  roots->add_option("--bits", opt.bits, "Requested relative precision bits");
  add_out(roots);

  CLI::App* specratio =
      tools->add_subcommand("specratio", "Certified spectral ratio");
  specratio->add_option("--poly", opt.poly, "Polynomial");
  specratio->add_option("--matrix", opt.matrix, "Matrix");
  specratio->add_option("--bits", opt.bits, "Precision bits");
  add_out(specratio);

  CLI::App* reduce =
      tools->add_subcommand("reduce", "Reduce coefficients mod a prime");
  reduce->add_option("--poly", opt.poly, "Polynomial")->required();
  reduce->add_option("--mod", opt.mod, "Prime modulus")->required();
  add_out(reduce);

  CLI::App* run =
      app.add_subcommand("run", "Iteration and sampling experiments");
  run->require_subcommand(1);

  CLI::App* iterate =
      run->add_subcommand("iterate", "Projective power iteration trace");
  iterate->add_option("--matrix", opt.matrix, "Matrix (file, JSON, or CSV)");
  iterate->add_option("--family", opt.family, "Family name");
  iterate->add_option("--k", opt.k, "Single family parameter");
  iterate->add_option("--steps", opt.steps, "Iteration steps");
  iterate->add_flag("--strict", opt.strict, "Exit 1 when not converged");
  iterate->add_option("--out", opt.out, "Trace CSV path (default iterate.csv)");

  CLI::App* sample =
      run->add_subcommand("sample", "Sample random words and their ratios");
  sample->add_option("--gens", opt.gens, "Generator set JSON (file or inline)")
      ->required();
  sample->add_option("--length", opt.length, "Word lengths: '10' or '2..10'")
      ->required();
  sample->add_option("--count", opt.count, "Samples per length");
  sample->add_option("--seed", opt.seed, "Base RNG seed")->required();
  sample->add_option("--out", opt.out, "Output base path (default samples)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(opt);
    if (*family) return cmd_family(opt);
    if (*catalog) return cmd_catalog(opt);
    if (*charpoly) return cmd_charpoly(opt);
    if (*factor) return cmd_factor(opt);
    if (*roots) return cmd_roots(opt);
    if (*specratio) return cmd_specratio(opt);
    if (*reduce) return cmd_reduce(opt);
    if (*iterate) return cmd_iterate(opt);
    if (*sample) return cmd_sample(opt);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  std::fprintf(stderr, "error: no subcommand\n");
  return 2;
}
