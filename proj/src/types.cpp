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

#include "bergman/types.hpp"

#include <algorithm>
#include <cctype>

#include "bergman/error.hpp"

namespace bergman {

std::string to_string(DomainId id) {
  switch (id.kind) {
    case DomainKind::kD1: return "d1";
    case DomainKind::kD2: return "d2";
    case DomainKind::kD3: return "d3";
    case DomainKind::kD4: return "d4";
    case DomainKind::kBall: return "ball" + std::to_string(id.ball_dim);
  }
  return "unknown";
}

DomainId parse_domain(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "d1") return DomainId::d1();
  if (t == "d2") return DomainId::d2();
  if (t == "d3") return DomainId::d3();
  if (t == "d4") return DomainId::d4();
  if (t.rfind("ball", 0) == 0 && t.size() > 4 && t.size() <= 6 &&
      std::all_of(t.begin() + 4, t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const int n = std::stoi(t.substr(4));
    if (n >= 1) return DomainId::ball(n);
  }
  raise(ErrorCode::kParseError, "unknown domain '" + text + "'");
}

KernelPoint::KernelPoint(ComplexPoint z_, ComplexPoint w_) : z(std::move(z_)), w(std::move(w_)) {
  require(z.size() == w.size(), ErrorCode::kDimensionMismatch,
          "KernelPoint: z and w differ in length");
}

std::vector<cplx> KernelPoint::nu() const {
  std::vector<cplx> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i] * std::conj(w[i]);
  return out;
}

}  // namespace bergman
