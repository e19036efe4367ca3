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

#ifndef CEE_CLI_REPORT_HPP_
#define CEE_CLI_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "cee/rational.hpp"

namespace cee::cli {

using Report = nlohmann::ordered_json;

// {"fraction": "7/800", "decimal": "0.00875"}
Report rational_field(const Rational& value);
Report rational_vector(const std::vector<Rational>& values);
// {"approximate": "..."} for values computed in floating point.
Report real_field(double value);

std::string render_json(const Report& report);
std::string render_text(const Report& report);

}  // namespace cee::cli

#endif  // CEE_CLI_REPORT_HPP_
