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

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

// A point z or w in C^n.
using ComplexPoint = std::vector<cplx>;

// Exponent tuple of a monomial z^alpha. Entries may be negative only in the
// first slot, and only for D3.
using MultiIndex = std::vector<int>;

enum class DomainKind { kD1, kD2, kD3, kD4, kBall };

struct DomainId {
  DomainKind kind = DomainKind::kD1;
  int ball_dim = 0;  // only meaningful for kBall

  static constexpr DomainId d1() { return {DomainKind::kD1, 0}; }
  static constexpr DomainId d2() { return {DomainKind::kD2, 0}; }
  static constexpr DomainId d3() { return {DomainKind::kD3, 0}; }
  static constexpr DomainId d4() { return {DomainKind::kD4, 0}; }
  static constexpr DomainId ball(int n) { return {DomainKind::kBall, n}; }

  int dim() const {
    switch (kind) {
      case DomainKind::kD4: return 4;
      case DomainKind::kBall: return ball_dim;
      default: return 3;
    }
  }

  friend bool operator==(const DomainId&, const DomainId&) = default;
};

std::string to_string(DomainId id);

// Parses "d1".."d4" or "ball<n>" (case-insensitive). Throws kParseError.
DomainId parse_domain(const std::string& text);

// Pair (z, w) at which a kernel is evaluated. nu() is recomputed on demand
// so it never goes stale.
struct KernelPoint {
  ComplexPoint z;
  ComplexPoint w;

  KernelPoint() = default;
  KernelPoint(ComplexPoint z_, ComplexPoint w_);

  std::size_t dim() const { return z.size(); }
  // nu_i = z_i * conj(w_i)
  std::vector<cplx> nu() const;
  KernelPoint swapped() const { return KernelPoint(w, z); }
};

}  // namespace bergman
