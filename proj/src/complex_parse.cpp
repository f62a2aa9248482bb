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

#include "bergman/complex_parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "bergman/error.hpp"

namespace bergman {

namespace {

[[noreturn]] void bad(std::string_view text, const char* why) {
  raise(ErrorCode::kParseError, "'" + std::string(text) + "': " + why);
}

// Reads a signed decimal real from the front of `s`, advancing it. from_chars
// alone would also take "inf"/"nan" and reject a leading '+'.
double read_real(std::string_view& s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || !(std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '.'))
    bad(whole, "expected a decimal number");
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc()) bad(whole, "malformed or out-of-range number");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return neg ? -v : v;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  std::string_view s = text;
  const double first = read_real(s, text);
  if (s.empty()) return {first, 0.0};
  if (s == "i") return {0.0, first};
  if (s.front() != '+' && s.front() != '-') bad(text, "unexpected trailing characters");
  const double second = read_real(s, text);
  if (s != "i") bad(text, "imaginary part must end in 'i'");
  return {first, second};
}

ComplexPoint parse_point(std::string_view text) {
  if (text.empty()) bad(text, "empty point");
  ComplexPoint p;
  for (std::string_view part : split_commas(text)) p.push_back(parse_complex(part));
  return p;
}

MultiIndex parse_multi_index(std::string_view text) {
  if (text.empty()) bad(text, "empty multi-index");
  MultiIndex alpha;
  for (std::string_view part : split_commas(text)) {
    std::string_view s = part;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      bad(text, "expected comma-separated integers");
    alpha.push_back(v);
  }
  return alpha;
}

}  // namespace bergman
