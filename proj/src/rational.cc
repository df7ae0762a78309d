// Copyright 2026 The mwp-attack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mwp/rational.h"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace mwp {
namespace {

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::optional<Rational> ParseDecimal(std::string_view text) {
  size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  boost::multiprecision::cpp_int numerator = 0;
  boost::multiprecision::cpp_int denominator = 1;
  size_t int_digits = 0;
  size_t group_len = 0;
  bool saw_comma = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (IsDigit(c)) {
      numerator = numerator * 10 + (c - '0');
      ++int_digits;
      ++group_len;
    } else if (c == ',' && int_digits > 0) {
      if (saw_comma && group_len != 3) return std::nullopt;
      saw_comma = true;
      group_len = 0;
    } else {
      break;
    }
  }
  if (saw_comma && group_len != 3) return std::nullopt;
  size_t frac_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (; pos < text.size() && IsDigit(text[pos]); ++pos) {
      numerator = numerator * 10 + (text[pos] - '0');
      denominator *= 10;
      ++frac_digits;
    }
  }
  if (pos != text.size() || int_digits + frac_digits == 0) return std::nullopt;
  Rational value(numerator, denominator);
  return negative ? Rational(-value) : value;
}

}  // namespace

std::optional<Rational> ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return ParseDecimal(text);
  auto num = ParseDecimal(text.substr(0, slash));
  auto den = ParseDecimal(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num / *den);
}

std::string FormatRational(const Rational& value) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  cpp_int rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  const int places = std::max(twos, fives);
  cpp_int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  cpp_int scaled = num * (scale / den);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (digits.size() <= static_cast<size_t>(places)) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

Rational FromDouble(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("FromDouble: non-finite value");
  }
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // 53 bits of mantissa make the scaled value an exact integer.
  const long long scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result(scaled);
  boost::multiprecision::cpp_int power = 1;
  power <<= std::abs(exponent);
  if (exponent >= 0) {
    result *= Rational(power);
  } else {
    result /= Rational(power);
  }
  return result;
}

}  // namespace mwp
