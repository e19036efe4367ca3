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

#ifndef CEE_RATIONAL_HPP_
#define CEE_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cee {

// Exact probabilities and values. Always kept canonical (reduced, positive
// denominator).
using Rational = mpq_class;

// Parses "3", "-0.00625", "1/160", "2.5e-3". Throws ParseError on anything
// else. The result is exact: decimal literals become the fraction they spell.
Rational parse_rational(std::string_view text);

// "1/160", "0", "-7/800".
std::string fraction_string(const Rational& value);

// Exact decimal when the denominator only has factors 2 and 5, otherwise the
// value rounded half-up to `places` digits after the point.
std::string decimal_string(const Rational& value, int places = 15);

// Decimal form when exact, fraction form otherwise. Re-parses to `value`.
std::string exact_string(const Rational& value);

double to_double(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace cee

#endif  // CEE_RATIONAL_HPP_
