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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bergman/types.hpp"

namespace bergman {

enum class Suite {
  kGauss,      // elementary Gauss closed forms vs series
  kF8Closed,     // F8 closed forms (all branches) vs series
  kQuadSum,    // quadruple sum: closed vs series
  kRecursion,  // F8 contiguous relation
  kNorms,      // monomial norms vs quadrature
  kKernels,    // closed kernels vs orthonormal series, symmetry, positivity
  kJets,       // jet mixed partials vs finite differences
  kTransform,  // D1 -> D3 transformation rule and inequality chain
};

// Accepts the names above in lower case ("gauss", "lem1", "lemd3",
// "recursion", "norms", "kernels", "jets", "transform"); "lem2" is an alias
// of "lemd3". Throws kParseError.
Suite parse_suite(const std::string& name);
std::string to_string(Suite suite);

struct VerifyOptions {
  std::uint64_t samples = 0;  // 0: suite default
  std::uint64_t seed = 1;
  double tol = 0.0;           // 0: suite default
  std::optional<DomainId> domain;  // norms / kernels: restrict to one domain
};

struct CheckRecord {
  std::string label;
  double error = 0.0;  // +inf when the check threw
  double tol = 0.0;
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  double worst_error = 0.0;
  std::vector<CheckRecord> details;
  std::map<std::string, double> metrics;     // numeric findings
  std::map<std::string, std::string> notes;  // textual findings

  bool ok() const { return failed == 0 && passed > 0; }
  void add(CheckRecord rec);
};

SuiteReport run_suite(Suite suite, const VerifyOptions& opts = {});

}  // namespace bergman
