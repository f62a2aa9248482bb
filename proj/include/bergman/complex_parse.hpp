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

#include <string_view>

#include "bergman/types.hpp"

namespace bergman {

// Complex literals: `a`, `bi`, `a+bi`, `a-bi`, where a and b are decimal
// reals (optional sign, optional fraction, optional exponent). No whitespace.
// Throws kParseError.
cplx parse_complex(std::string_view text);

// Comma-separated complex literals, e.g. "0.5,0.1+0.2i,-0.3i".
ComplexPoint parse_point(std::string_view text);

// Comma-separated integers, e.g. "-1,0,2".
MultiIndex parse_multi_index(std::string_view text);

}  // namespace bergman
