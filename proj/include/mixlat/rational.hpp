// Copyright 2026 The mixlat Authors
//
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

#ifndef MIXLAT_RATIONAL_HPP
#define MIXLAT_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {

// Boost 1.74 under C++20: `r == 0` picks the reversed (int, rational) template,
// which calls itself. An exact (rational, int) overload wins the tie.
template <class IntType>
constexpr bool operator==(const rational<IntType>& a, int b) {
  return a.denominator() == 1 && a.numerator() == static_cast<IntType>(b);
}

}  // namespace boost

namespace mixlat {

/// Exact rational scalar used for every free coordinate.
using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-7", "1/2", "-5/3" or a terminating decimal such as "2.5".
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

/// Largest integer not above r.
std::int64_t floor_int(const Rational& r);
/// Smallest integer not below r.
std::int64_t ceil_int(const Rational& r);

}  // namespace mixlat

#endif  // MIXLAT_RATIONAL_HPP
