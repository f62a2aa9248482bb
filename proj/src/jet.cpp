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

#include "bergman/jet.hpp"

#include <cmath>

#include "detail/cmath.hpp"

namespace bergman {

Jet2 jet_pow(const Jet2& a, double p) {
  if (p == 0.0) return Jet2(1.0);
  if (p == 1.0) return a;
  const double rounded = std::nearbyint(p);
  if (rounded == p && std::fabs(p) < 1e6) {
    const int n = static_cast<int>(rounded);
    if (n < 0 && a.val == cplx(0.0, 0.0))
      raise(ErrorCode::kDivisionByZero, "jet_pow: negative power of zero");
    const cplx f0 = detail::ipow(a.val, n);
    const cplx f1 = static_cast<double>(n) * detail::ipow(a.val, n - 1);
    const cplx f2 = n == 1 ? cplx(0.0)
                           : static_cast<double>(n) * static_cast<double>(n - 1) *
                                 detail::ipow(a.val, n - 2);
    return jet_apply(a, f0, f1, f2);
  }
  if (a.val == cplx(0.0, 0.0))
    raise(ErrorCode::kDivisionByZero, "jet_pow: fractional power at zero");
  if (a.val.imag() == 0.0 && a.val.real() < 0.0)
    raise(ErrorCode::kBranchCut, "jet_pow: base on the principal cut");
  const cplx f0 = std::pow(a.val, p);
  const cplx f1 = p * f0 / a.val;
  const cplx f2 = (p - 1.0) * f1 / a.val;
  return jet_apply(a, f0, f1, f2);
}

}  // namespace bergman
