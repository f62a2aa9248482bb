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

#include "bergman/json_format.hpp"
#include "bergman/luqikeng.hpp"
#include "bergman/verify.hpp"

namespace bergman {

Json point_json(const ComplexPoint& p);

// {argmin_pair, diagonal_violations, domain, hermitian_violations, min_modulus,
//  min_relative, pairs_tested, seed, series_fallbacks, zero_hits, zero_threshold}
Json to_json(const ScanReport& r);

// {suite, passed, failed, worst_error, details, metrics, notes}
Json to_json(const SuiteReport& r);

}  // namespace bergman
