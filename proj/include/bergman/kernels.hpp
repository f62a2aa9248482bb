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

#include <vector>

#include "bergman/special_functions.hpp"
#include "bergman/types.hpp"

namespace bergman {

// Normalisation of the D2 kernel. The first is the value consistent with the
// quadrature-verified monomial norms and is the one used; the second is kept
// for the verification report.
double d2_prefactor();          // 3 / pi^3
double d2_prefactor_alternative();  // 3 / (2 pi^3)

// Degeneracy thresholds below which the closed forms raise kDegenerateInput.
inline constexpr double kD2DiagonalThreshold = 1e-6;  // |nu2 - nu3|
inline constexpr double kD2ZeroThreshold = 1e-8;      // |nu2|, |nu3|
inline constexpr double kD4ZeroThreshold = 1e-8;      // |nu4|, |nu4 - (nu3 - nu3^2)|
inline constexpr double kD4BranchThreshold = 1e-6;    // |1 - 4 nu4|

cplx kernel_ball(int n, const KernelPoint& pt);
cplx kernel_d1(const KernelPoint& pt);
cplx kernel_d2(const KernelPoint& pt);
cplx kernel_d3(const KernelPoint& pt);
cplx kernel_d4(const KernelPoint& pt);

// D3 kernel with the last numerator factor 3 nu1 + nu3 - 3 in place of
// 3 nu1 + nu2 - 3. Diagnostic only: it fails the series and transformation
// checks, which the verification report records.
cplx kernel_d3_variant(const KernelPoint& pt);

// Closed form for any domain; may throw kDegenerateInput (D2, D4).
cplx kernel_closed(DomainId domain, const KernelPoint& pt);

struct KernelValue {
  cplx value;
  bool from_series = false;  // closed form was degenerate, series used
};

// Closed form with automatic fallback to the series oracle on
// kDegenerateInput.
KernelValue kernel_eval(DomainId domain, const KernelPoint& pt,
                        const TruncationConfig& series_cfg = {});

enum class AuxPoly { kV1, kV2, kP, kG, kW1Sum, kW2Sum, kW1Kernel, kW2Kernel };

// Auxiliary polynomials of the closed forms (3 arguments for V1, V2, P, G; 4 for the W's).
cplx aux_polynomial(AuxPoly which, const std::vector<cplx>& args);

}  // namespace bergman
