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

#include "mixlat/element.hpp"

#include <algorithm>

namespace mixlat {

bool operator<(const Element& a, const Element& b) {
  if (a.coords != b.coords)
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                        b.coords.begin(), b.coords.end());
  return std::lexicographical_compare(a.tors.begin(), a.tors.end(),
                                      b.tors.begin(), b.tors.end());
}

Rational grade(const Element& e) {
  Rational g(0);
  for (const auto& c : e.coords) g = std::max(g, abs(c));
  return g;
}

std::string raw_format(const Element& e) {
  std::size_t n = e.coords.size() + e.tors.size();
  std::string out;
  if (n != 1) out += '(';
  bool first = true;
  for (const auto& c : e.coords) {
    if (!first) out += ',';
    out += to_string(c);
    first = false;
  }
  for (auto t : e.tors) {
    if (!first) out += ',';
    out += std::to_string(t);
    first = false;
  }
  if (n != 1) out += ')';
  return out;
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& c : e.coords) {
    mix(static_cast<std::uint64_t>(c.numerator()));
    mix(static_cast<std::uint64_t>(c.denominator()));
  }
  for (auto t : e.tors) mix(static_cast<std::uint64_t>(t) ^ 0x5bd1e995ULL);
  return h;
}

}  // namespace mixlat
