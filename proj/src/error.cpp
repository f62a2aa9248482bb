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

#include "bergman/error.hpp"

namespace bergman {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kDivergentInput: return "DivergentInput";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kBranchCut: return "BranchCut";
    case ErrorCode::kSingularInput: return "SingularInput";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kInvalidIndex: return "InvalidIndex";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSamplerStall: return "SamplerStall";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace bergman
