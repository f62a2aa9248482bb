// Copyright 2026 The Bergman Kernels Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through the C API.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bergman/bergman_c.h"
#include "bergman/json_format.hpp"

namespace {

using bergman::Json;

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kMembership = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(bk_status s) {
  switch (s) {
    case BK_PARSE_ERROR:
    case BK_DIMENSION_MISMATCH:
    case BK_INVALID_INDEX:
      return kParse;
    case BK_PRECONDITION_VIOLATION:
      return kMembership;
    default:
      return kCheckFailed;
  }
}

void ok(bk_status s) {
  if (s != BK_OK) throw Failure{exit_for(s), bk_last_error()};
}

std::vector<bk_complex> point(const std::string& text) {
  std::vector<bk_complex> p(16);
  size_t n = 0;
  ok(bk_parse_point(text.c_str(), p.data(), p.size(), &n));
  p.resize(n);
  return p;
}

Json point_json(const std::vector<bk_complex>& p) {
  Json a = Json::array();
  for (const bk_complex& c : p) a.push_back(bergman::complex_json(c.re, c.im));
  return a;
}

// --- output ------------------------------------------------------------------

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : bergman::dump_json(v);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Row-per-check table for suite reports, key/value rows for everything else.
std::string to_csv(const Json& j) {
  std::string out;
  if (j.contains("details") && j["details"].is_array()) {
    out = "label,error,tol,passed\n";
    for (const Json& d : j["details"])
      out += csv_cell(d["label"]) + "," + csv_cell(d["error"]) + "," + csv_cell(d["tol"]) + "," +
             csv_cell(d["passed"]) + "\n";
    return out;
  }
  out = "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it) out += it.key() + "," + csv_cell(it.value()) + "\n";
  return out;
}

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const Json& j) const {
    const std::string text = format == "csv" ? to_csv(j) : bergman::dump_json(j);
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Failure{kCheckFailed, "cannot open " + path};
    f << text;
  }
};

// Takes ownership of a C report and returns its parsed JSON and verdict.
std::pair<Json, bool> consume(bk_report_t* r) {
  std::pair<Json, bool> out{Json::parse(bk_report_json(r)), bk_report_passed(r) != 0};
  bk_report_free(r);
  return out;
}

// --- subcommands ---------------------------------------------------------------

int cmd_eval(const std::string& domain, const std::string& zs, const std::string& ws,
             const Output& out) {
  const auto z = point(zs), w = point(ws);
  if (z.size() != w.size()) throw Failure{kParse, "--z and --w have different lengths"};
  bk_complex closed{}, series{};
  int used_series = 0;
  ok(bk_kernel(domain.c_str(), z.data(), w.data(), z.size(), 1, &closed, &used_series));
  Json j{{"closed", bergman::complex_json(closed.re, closed.im)},
         {"closed_used_series", used_series != 0},
         {"domain", domain},
         {"w", point_json(w)},
         {"z", point_json(z)}};
  double tail = 0.0;
  int terms = 0;
  const bk_status s = bk_kernel_series(domain.c_str(), z.data(), w.data(), z.size(), 600, 1e-16,
                                       &series, &tail, &terms);
  if (s == BK_OK) {
    j["series"] = bergman::complex_json(series.re, series.im);
    j["series_tail_estimate"] = tail;
    j["series_terms"] = terms;
    j["diff"] = std::hypot(closed.re - series.re, closed.im - series.im);
  } else if (s == BK_NON_CONVERGENCE) {
    j["series"] = nullptr;
    j["series_error"] = bk_last_error();
    j["diff"] = nullptr;
  } else {
    ok(s);
  }
  out.emit(j);
  return kOk;
}

int cmd_verify(const std::string& suite, const bk_verify_options& opts, const Output& out) {
  bk_report_t* r = nullptr;
  ok(bk_verify(suite.c_str(), &opts, &r));
  const auto [j, passed] = consume(r);
  out.emit(j);
  return passed ? kOk : kCheckFailed;
}

int cmd_volume(const std::string& domain, const std::string& method, std::uint64_t samples,
               std::uint64_t seed, const Output& out) {
  static const std::map<std::string, bk_volume_method> methods = {
      {"formula", BK_VOLUME_FORMULA},
      {"quadrature", BK_VOLUME_QUADRATURE},
      {"monte-carlo", BK_VOLUME_MONTE_CARLO},
      {"mc", BK_VOLUME_MONTE_CARLO}};
  const auto m = methods.find(method);
  if (m == methods.end()) throw Failure{kParse, "unknown --method '" + method + "'"};
  double value = 0.0, se = 0.0;
  ok(bk_volume(domain.c_str(), m->second, samples, seed, &value, &se));
  Json j{{"domain", domain}, {"method", m->first == "mc" ? "monte-carlo" : m->first}, {"value", value}};
  if (m->second == BK_VOLUME_MONTE_CARLO) {
    j["samples"] = samples;
    j["seed"] = seed;
    j["std_error"] = se;
  }
  out.emit(j);
  return kOk;
}

int cmd_norms(const std::string& domain, const std::string& alpha_text, const Output& out) {
  std::vector<int> alpha(16);
  size_t n = 0;
  ok(bk_parse_index(alpha_text.c_str(), alpha.data(), alpha.size(), &n));
  alpha.resize(n);
  double norm = 0.0, quad = 0.0;
  ok(bk_monomial_norm(domain.c_str(), alpha.data(), n, &norm));
  ok(bk_monomial_norm_quadrature(domain.c_str(), alpha.data(), n, 64, &quad));
  out.emit(Json{{"alpha", alpha},
                {"domain", domain},
                {"norm", norm},
                {"norm_quadrature", quad},
                {"relative_difference", std::abs(norm - quad) / quad}});
  return kOk;
}

int cmd_scan(const std::string& domain, std::uint64_t pairs, std::uint64_t seed, double threshold,
             const Output& out) {
  bk_report_t* r = nullptr;
  ok(bk_zero_scan(domain.c_str(), pairs, seed, threshold, &r));
  const auto [j, clean] = consume(r);
  out.emit(j);
  return clean ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bergman kernels of four Reinhardt domains: evaluation and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bk_version());

  Output out;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", out.path, "Write output to this file instead of stdout");
  };

  std::string domain, z, w, alpha, suite, method = "quadrature";
  std::uint64_t samples = 0, pairs = 100000, seed = 1;
  double tol = 0.0;

  auto* eval = app.add_subcommand("eval", "Closed-form kernel, series oracle and their difference");
  eval->add_option("--domain", domain, "d1, d2, d3, d4 or ball<n>")->required();
  eval->add_option("--z", z, "Point z, e.g. 0.5,0.1+0.2i,0")->required();
  eval->add_option("--w", w, "Point w")->required();
  add_output(eval);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "gauss, lem1, lemd3, recursion, norms, kernels, jets, transform")
      ->required();
  verify->add_option("--samples", samples, "Sample count (0: suite default)");
  verify->add_option("--seed", seed, "Seed")->capture_default_str();
  verify->add_option("--tol", tol, "Tolerance (0: suite default)");
  verify->add_option("--domain", domain, "Restrict norms/kernels to one domain");
  add_output(verify);

  auto* vol = app.add_subcommand("volume", "Domain volume");
  vol->add_option("--domain", domain)->required();
  vol->add_option("--method", method, "formula, quadrature or monte-carlo")->capture_default_str();
  vol->add_option("--samples", samples, "Monte-Carlo samples (default 10^7)");
  vol->add_option("--seed", seed)->capture_default_str();
  add_output(vol);

  auto* norms = app.add_subcommand("norms", "Squared norm of a monomial");
  norms->add_option("--domain", domain)->required();
  norms->add_option("--alpha", alpha, "Exponents, e.g. -1,0,0")->required();
  add_output(norms);

  auto* scan = app.add_subcommand("scan", "Seeded zero scan of a kernel over D x D");
  scan->add_option("--domain", domain)->required();
  scan->add_option("--pairs", pairs)->capture_default_str();
  scan->add_option("--seed", seed)->capture_default_str();
  scan->add_option("--tol", tol, "Relative zero threshold (default 1e-12)");
  add_output(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*eval) return cmd_eval(domain, z, w, out);
    if (*verify) {
      bk_verify_options opts{samples, seed, tol, domain.empty() ? nullptr : domain.c_str()};
      return cmd_verify(suite, opts, out);
    }
    if (*vol) return cmd_volume(domain, method, samples ? samples : 10'000'000, seed, out);
    if (*norms) return cmd_norms(domain, alpha, out);
    if (*scan) return cmd_scan(domain, pairs, seed, tol > 0.0 ? tol : 1e-12, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kCheckFailed;
}
