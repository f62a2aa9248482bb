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
#include <utility>
#include <vector>

#include "bergman/types.hpp"

namespace bergman {

using PointPair = std::pair<ComplexPoint, ComplexPoint>;

struct ScanReport {
  DomainId domain;
  std::uint64_t pairs_tested = 0;
  double min_modulus = 0.0;     // min |K(z, w)| over tested pairs
  PointPair argmin_pair;
  double min_relative = 0.0;    // min |K(z, w)| / scale, scale as below
  std::vector<PointPair> zero_hits;
  std::uint64_t seed = 0;
  double zero_threshold = 0.0;
  std::uint64_t series_fallbacks = 0;  // pairs evaluated through the series
  // Structural checks done on the way: K(w, z) == conj K(z, w) bit for bit,
  // and K(z, z), K(w, w) real and positive.
  std::uint64_t hermitian_violations = 0;
  std::uint64_t diagonal_violations = 0;
};

// A pair is a hit when |K(z, w)| < zero_threshold * max(1, sqrt(|K(z,z)| |K(w,w)|)).
ScanReport scan_pairs(DomainId domain, const std::vector<PointPair>& pairs,
                      double zero_threshold);

// Seeded scan: nine in ten pairs have independent endpoints, the tenth places
// w in a small neighbourhood of z. Deterministic for any worker count.
ScanReport zero_scan(DomainId domain, std::uint64_t pairs, std::uint64_t seed,
                     double zero_threshold = 1e-12);

// F(z) = (z1, z2, z1 z3), mapping D1 minus {z1 = 0} onto D3.
ComplexPoint d1_to_d3(const ComplexPoint& z);

// |K_D1(z, w) - z1 conj(w1) K_D3(F z, F w)|.
double biholomorphism_check(const ComplexPoint& z, const ComplexPoint& w);

// For z, w in D3: |nu3| < |nu1| and |nu1|^2 + |nu3| < |nu1|.
bool proof_inequality_check(const ComplexPoint& z, const ComplexPoint& w);

// The same chain with nu2 in place of nu3 in the second inequality. It does
// not follow from membership in D3 and fails on part of D3 x D3; kept so the
// verification report can show where.
bool proof_inequality_check_nu2_variant(const ComplexPoint& z, const ComplexPoint& w);

}  // namespace bergman
