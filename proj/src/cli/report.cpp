// Copyright 2026 The cee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.hpp"

#include <cstdio>

namespace cee::cli {
namespace {

bool is_rational(const Report& r) { return r.is_object() && r.contains("fraction"); }
bool is_real(const Report& r) { return r.is_object() && r.contains("approximate"); }

std::string scalar_text(const Report& r) {
  if (is_rational(r)) {
    const auto f = r["fraction"].get<std::string>();
    const auto d = r["decimal"].get<std::string>();
    return f == d ? f : f + " (" + d + ")";
  }
  if (is_real(r)) return "~" + r["approximate"].get<std::string>();
  if (r.is_string()) return r.get<std::string>();
  return r.dump();
}

bool inline_array(const Report& r) {
  for (const auto& x : r) {
    if (x.is_object() && !is_rational(x) && !is_real(x)) return false;
    if (x.is_array()) return false;
  }
  return true;
}

void render(const std::string& key, const Report& value, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object() && !is_rational(value) && !is_real(value)) {
    out += pad + key + ":\n";
    for (const auto& [k, v] : value.items()) render(k, v, indent + 2, out);
    return;
  }
  if (value.is_array() && !inline_array(value)) {
    out += pad + key + ":\n";
    for (const auto& item : value) {
      if (item.is_object()) {
        bool first = true;
        for (const auto& [k, v] : item.items()) {
          std::string line;
          render(k, v, 0, line);
          out += pad + (first ? "  - " : "    ") + line;
          first = false;
        }
      } else {
        out += pad + "  - " + scalar_text(item) + "\n";
      }
    }
    return;
  }
  if (value.is_array()) {
    std::string joined;
    for (const auto& x : value) joined += (joined.empty() ? "" : ", ") + scalar_text(x);
    out += pad + key + ": (" + joined + ")\n";
    return;
  }
  out += pad + key + ": " + scalar_text(value) + "\n";
}

}  // namespace

Report rational_field(const Rational& value) {
  Report r;
  r["fraction"] = fraction_string(value);
  r["decimal"] = decimal_string(value);
  return r;
}

Report rational_vector(const std::vector<Rational>& values) {
  Report r = Report::array();
  for (const Rational& v : values) r.push_back(rational_field(v));
  return r;
}

Report real_field(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  Report r;
  r["approximate"] = buf;
  return r;
}

std::string render_json(const Report& report) { return report.dump(2) + "\n"; }

std::string render_text(const Report& report) {
  std::string out;
  for (const auto& [k, v] : report.items()) render(k, v, 0, out);
  return out;
}

}  // namespace cee::cli
