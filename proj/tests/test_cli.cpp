// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool. Each test spawns the real
// binary (path injected by the build) and inspects exit codes and output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef SPECRATIO_CLI_PATH
#error "SPECRATIO_CLI_PATH must point at the specratio binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(SPECRATIO_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("spectral ratio of x^2 - 3x + 1 is phi^4") {
  RunResult r = run_cli("tools specratio --poly \"1,-3,1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"ratio\": 6.854101966") != std::string::npos);
}

TEST_CASE("factor splits x^3 - 1 into both parts") {
  RunResult r = run_cli("tools factor --poly \"-1,0,0,1\"");
  CHECK(r.exit_code == 0);
  // (x - 1): coeffs [-1, 1]; (x^2 + x + 1): coeffs [1, 1, 1].
  CHECK(r.out.find("\"-1\",\n        \"1\"") != std::string::npos);
  CHECK(r.out.find("\"1\",\n        \"1\",\n        \"1\"") !=
        std::string::npos);
}

TEST_CASE("reduce prints the mod-7 image of the k=10 sextic") {
  RunResult r = run_cli("tools reduce --poly \"1,0,-6765,-28657,-6765,0,1\" --mod 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1,0,4,1,4,0,1\n");
  RunResult bad = run_cli("tools reduce --poly \"1,1\" --mod 6");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("charpoly accepts semicolon-separated matrix text") {
  RunResult r = run_cli("tools charpoly --matrix \"0,0,1;1,0,16;0,1,0\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"-16\"") != std::string::npos);
}

TEST_CASE("roots returns certified disks") {
  RunResult r = run_cli("tools roots --poly \"-2,0,1\" --bits 80");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"precision_met\": true") != std::string::npos);
  CHECK(r.out.find("1.41421356") != std::string::npos);
}

TEST_CASE("verify passes for valid genus3 parameters") {
  RunResult r = run_cli("verify --family genus3 --k 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("verify exits 2 on invalid parameters") {
  CHECK(run_cli("verify --family s05 --k 6").exit_code == 2);
  CHECK(run_cli("verify --family genus3 --k 9").exit_code == 2);
  CHECK(run_cli("verify --family nope --k 3").exit_code == 2);
  CHECK(run_cli("verify --family gl3 --k x").exit_code == 2);
}

TEST_CASE("verify writes the report file even while printing to stdout") {
  const std::string path = "cli_verify_report.json";
  std::remove(path.c_str());
  RunResult r = run_cli("verify --family quadratic --k 3..5 --out " + path);
  CHECK(r.exit_code == 0);
  std::string body = slurp(path);
  CHECK(body == r.out);
  CHECK(body.find("\"family\": \"quadratic\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("family emits instances and catalog emits the table") {
  RunResult fam = run_cli("family --family gl3 --k 4");
  CHECK(fam.exit_code == 0);
  CHECK(fam.out.find("\"word_length\": 4") != std::string::npos);
  RunResult many = run_cli("family --family gl3 --k 1..3");
  CHECK(many.exit_code == 0);
  CHECK(many.out.front() == '[');
  RunResult cat = run_cli("catalog");
  CHECK(cat.exit_code == 0);
  CHECK(cat.out.find("\"status\": \"E\"") != std::string::npos);
  CHECK(cat.out.find("\"legend\"") != std::string::npos);
}

TEST_CASE("iterate reports a fitted rate near the spectral gap") {
  const std::string path = "cli_iterate_trace.csv";
  std::remove(path.c_str());
  RunResult r =
      run_cli("run iterate --family gl3 --k 4 --steps 200 --out " + path);
  CHECK(r.exit_code == 0);
  // Summary JSON repeats the fitted rate; the gl3(4) gap is ~0.98449.
  CHECK(r.out.find("\"fitted_rate\": 0.98") != std::string::npos);
  std::string csv = slurp(path);
  CHECK(csv.rfind("step,distance", 0) == 0);
  std::remove(path.c_str());
  // Strict mode fails when the trace has not converged yet.
  RunResult strict =
      run_cli("run iterate --family gl3 --k 4 --steps 60 --strict --out " +
              path);
  CHECK(strict.exit_code == 1);
  CHECK(slurp(path).rfind("step,distance", 0) == 0);  // still written
  std::remove(path.c_str());
}

TEST_CASE("iterate rejects families without a matrix model") {
  CHECK(run_cli("run iterate --family s05 --k 5").exit_code == 2);
  CHECK(run_cli("run iterate --family gl3 --k 1,2").exit_code == 2);
}

TEST_CASE("sample requires a seed and writes both CSV files") {
  const std::string gens = "cli_gens.json";
  {
    std::ofstream out(gens);
    out << "{\"dimension\": 2, \"generators\": {"
        << "\"a\": {\"rows\": [[\"1\",\"1\"],[\"0\",\"1\"]]},"
        << "\"b\": {\"rows\": [[\"1\",\"0\"],[\"1\",\"1\"]]}},"
        << "\"inverse_closed\": true}";
  }
  CHECK(run_cli("run sample --gens " + gens + " --length 3 --count 5")
            .exit_code == 2);
  RunResult r = run_cli("run sample --gens " + gens +
                        " --length 3..4 --count 5 --seed 7 --out cli_samp");
  CHECK(r.exit_code == 0);
  std::string rows = slurp("cli_samp.csv");
  CHECK(rows.rfind("seed,length,word,", 0) == 0);
  CHECK(std::count(rows.begin(), rows.end(), '\n') == 11);  // header + 10
  std::string quart = slurp("cli_samp_quartiles.csv");
  CHECK(quart.rfind("length,min,q1,median,q3,max,samples,skipped", 0) == 0);
  // Determinism: the same seed reproduces the bytes.
  RunResult again = run_cli("run sample --gens " + gens +
                            " --length 3..4 --count 5 --seed 7 --out cli_samp2");
  CHECK(again.exit_code == 0);
  CHECK(slurp("cli_samp2.csv") == rows);
  for (const char* f : {"cli_gens.json", "cli_samp.csv",
                        "cli_samp_quartiles.csv", "cli_samp2.csv",
                        "cli_samp2_quartiles.csv"}) {
    std::remove(f);
  }
}

TEST_CASE("malformed inputs exit 2") {
  CHECK(run_cli("tools factor --poly \"not,a,poly\"").exit_code == 2);
  CHECK(run_cli("tools charpoly --matrix \"1,2;3\"").exit_code == 2);
  CHECK(run_cli("tools specratio").exit_code == 2);
  CHECK(run_cli("bogus").exit_code == 2);
}

TEST_CASE("polynomials load from files as well as inline text") {
  const std::string path = "cli_poly.json";
  {
    std::ofstream out(path);
    out << "{\"coeffs\": [\"1\", \"-3\", \"1\"]}";
  }
  RunResult r = run_cli("tools specratio --poly " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("6.854101966") != std::string::npos);
  std::remove(path.c_str());
}
