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

#include "bergman/report_json.hpp"

namespace bergman {

Json point_json(const ComplexPoint& p) {
  Json a = Json::array();
  for (const cplx& c : p) a.push_back(complex_json(c.real(), c.imag()));
  return a;
}

namespace {

Json pair_json(const PointPair& p) { return Json::array({point_json(p.first), point_json(p.second)}); }

}  // namespace

Json to_json(const ScanReport& r) {
  Json hits = Json::array();
  for (const PointPair& h : r.zero_hits) hits.push_back(pair_json(h));
  return Json{{"argmin_pair", pair_json(r.argmin_pair)},
              {"domain", to_string(r.domain)},
              {"min_modulus", r.min_modulus},
              {"diagonal_violations", r.diagonal_violations},
              {"hermitian_violations", r.hermitian_violations},
              {"min_relative", r.min_relative},
              {"pairs_tested", r.pairs_tested},
              {"seed", r.seed},
              {"series_fallbacks", r.series_fallbacks},
              {"zero_hits", hits},
              {"zero_threshold", r.zero_threshold}};
}

Json to_json(const SuiteReport& r) {
  Json details = Json::array();
  for (const CheckRecord& c : r.details)
    details.push_back({{"error", c.error}, {"label", c.label}, {"passed", c.passed}, {"tol", c.tol}});
  Json metrics = Json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = v;
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  return Json{{"details", details}, {"failed", r.failed},   {"metrics", metrics},
              {"notes", notes},     {"passed", r.passed},   {"suite", r.suite},
              {"worst_error", r.worst_error}};
}

}  // namespace bergman
