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

#ifndef MIXLAT_WINDOW_HPP
#define MIXLAT_WINDOW_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mixlat/carrier.hpp"

namespace mixlat {

/// Finite quantification region of a grid carrier. Checks quantify over
/// the box `bounds` sampled at multiples of 1/q; extrema are searched in
/// the box widened by `pad` on every side. Finite carriers ignore it.
struct Window {
  std::vector<std::pair<Rational, Rational>> bounds;
  std::int64_t q = 1;
  std::int64_t pad = 0;

  friend bool operator==(const Window&, const Window&) = default;

  Window padded() const;
  bool inside(const Element& e) const;
  /// Some free coordinate sits on the outer face of the box.
  bool on_rim(const Element& e) const;
};

/// Enumeration cap, MIXLAT_WINDOW_CAP or 10^6.
std::size_t window_cap();

/// Lexicographic enumeration of the carrier points in `w` (no padding).
std::vector<Element> enumerate_window(const Carrier& c, const Window& w);
/// Same for the padded search box.
std::vector<Element> enumerate_search_box(const Carrier& c, const Window& w);

std::string format_window(const Window& w);

/// Uniform box [lo,hi]^rank.
Window cube(std::size_t rank, Rational lo, Rational hi, std::int64_t q = 1, std::int64_t pad = 0);

}  // namespace mixlat

#endif  // MIXLAT_WINDOW_HPP
