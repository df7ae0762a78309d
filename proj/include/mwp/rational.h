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

#ifndef MWP_RATIONAL_H_
#define MWP_RATIONAL_H_

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mwp {

// Exact arbitrary-precision rational. All quantity values and equation
// arithmetic go through this type; doubles only appear at comparison time.
using Rational = boost::multiprecision::cpp_rational;

// Parses "12", "-3", "1.5", ".5", "1,000", "1/3". Returns nullopt on anything
// else (including trailing garbage).
std::optional<Rational> ParseRational(std::string_view text);

// Exact decimal when the denominator has only factors 2 and 5 ("1.5", "12"),
// otherwise "p/q".
std::string FormatRational(const Rational& value);

double ToDouble(const Rational& value);

// Exact conversion of a finite double (binary expansion, no rounding).
Rational FromDouble(double value);

}  // namespace mwp

#endif  // MWP_RATIONAL_H_
