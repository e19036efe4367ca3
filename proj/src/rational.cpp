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

#include "cee/rational.hpp"

#include <cctype>
#include <string>

#include "cee/errors.hpp"

namespace cee {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

// Digits of |integer| with a decimal point inserted `places` from the right.
std::string place_point(mpz_class magnitude, unsigned long places, bool negative) {
  std::string digits = magnitude.get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  if (negative && digits != "0") digits.insert(0, "-");
  return digits;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Rational { throw ParseError("malformed number '" + original + "'"); };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    Rational r(negative ? mpz_class(-n) : n, d);
    r.canonicalize();
    return r;
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) return fail();
    exponent = std::stol(std::string(exp));
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return fail();
    if (!int_part.empty() && !all_digits(int_part)) return fail();
    if (!frac_part.empty() && !all_digits(frac_part)) return fail();
  } else if (!all_digits(int_part)) {
    return fail();
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  if (digits.empty()) digits = "0";
  mpz_class mantissa(digits, 10);
  long scale = static_cast<long>(frac_part.size()) - exponent;
  Rational r;
  if (scale >= 0) {
    r = Rational(mantissa, pow10(static_cast<unsigned long>(scale)));
  } else {
    r = Rational(mantissa * pow10(static_cast<unsigned long>(-scale)));
  }
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string fraction_string(const Rational& value) { return value.get_str(); }

std::string decimal_string(const Rational& value, int places) {
  const bool negative = value < 0;
  const Rational magnitude = abs(value);
  mpz_class den = magnitude.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den == 1) {
    const unsigned long k = std::max(twos, fives);
    mpz_class scaled = magnitude.get_num() * pow10(k) / magnitude.get_den();
    return place_point(scaled, k, negative);
  }
  // Round half up on the magnitude.
  const auto p = static_cast<unsigned long>(places);
  mpz_class scaled = (2 * magnitude.get_num() * pow10(p) + magnitude.get_den()) /
                     (2 * magnitude.get_den());
  return place_point(scaled, p, negative);
}

std::string exact_string(const Rational& value) {
  mpz_class den = value.get_den();
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5;
  return den == 1 ? decimal_string(value) : fraction_string(value);
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace cee
