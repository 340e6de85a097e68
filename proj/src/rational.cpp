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

#include "mixlat/rational.hpp"

#include <charconv>
#include <limits>

namespace mixlat {
namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = parse_int(trim(text.substr(0, slash)));
      auto den = parse_int(trim(text.substr(slash + 1)));
      if (!num || !den || *den == 0) return std::nullopt;
      return Rational(*num, *den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      bool neg = text.front() == '-';
      std::string_view whole = text.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
      std::string_view frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 15) return std::nullopt;
      for (char c : frac)
        if (c < '0' || c > '9') return std::nullopt;
      auto w = whole.empty() ? std::optional<std::int64_t>(0) : parse_int(whole);
      auto f = parse_int(frac);
      if (!w || !f || *w < 0) return std::nullopt;
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      Rational r = Rational(*w) + Rational(*f, scale);
      return neg ? -r : r;
    }
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return Rational(*v);
  } catch (const boost::bad_rational&) {
    return std::nullopt;
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor_int(const Rational& r) {
  std::int64_t n = r.numerator(), d = r.denominator();
  std::int64_t q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

std::int64_t ceil_int(const Rational& r) {
  std::int64_t n = r.numerator(), d = r.denominator();
  std::int64_t q = n / d;
  if ((n % d != 0) && (n > 0)) ++q;
  return q;
}

}  // namespace mixlat
