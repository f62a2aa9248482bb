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

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace bergman {

using Json = nlohmann::json;

inline Json complex_json(double re, double im) { return Json::array({re, im}); }

// Canonical JSON text: keys sorted (nlohmann::json keeps objects in a
// std::map), two-space indentation, doubles printed with 17 significant
// digits and non-finite doubles as null. Identical input gives identical bytes.
inline void write_json(const Json& j, std::string& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        write_json(it.value(), out, indent + 2);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      // Short numeric arrays (complex numbers, points) stay on one line.
      bool flat = j.size() <= 8;
      for (const Json& e : j) {
        bool leaf = e.is_number();
        if (e.is_array() && e.size() == 2) leaf = e[0].is_number() && e[1].is_number();
        flat = flat && leaf;
      }
      out += flat ? "[" : "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += flat ? ", " : ",\n";
        if (!flat) out += pad;
        write_json(j[i], out, indent + 2);
      }
      out += flat ? "]" : "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) { out += "null"; return; }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

inline std::string dump_json(const Json& j) {
  std::string out;
  write_json(j, out);
  out += "\n";
  return out;
}

}  // namespace bergman
