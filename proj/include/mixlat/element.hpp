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

#ifndef MIXLAT_ELEMENT_HPP
#define MIXLAT_ELEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include <boost/container/small_vector.hpp>

#include "mixlat/rational.hpp"

namespace mixlat {

using Coords = boost::container::small_vector<Rational, 3>;
using Residues = boost::container::small_vector<std::int64_t, 2>;

/// A point of a carrier: free rational coordinates followed by torsion
/// residues. Elements of finite carriers store their table index as the
/// single coordinate.
struct Element {
  Coords coords;
  Residues tors;

  Element() = default;
  Element(std::initializer_list<Rational> c) : coords(c) {}
  Element(Coords c, Residues t) : coords(std::move(c)), tors(std::move(t)) {}

  friend bool operator==(const Element& a, const Element& b) {
    return a.coords == b.coords && a.tors == b.tors;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  /// Lexicographic by coordinates, then by residues.
  friend bool operator<(const Element& a, const Element& b);
};

/// Largest absolute value of a free coordinate; 0 for rank 0.
Rational grade(const Element& e);

/// Plain tuple rendering: "3", "(1,2)", "(0,1)" with residues last.
std::string raw_format(const Element& e);

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

}  // namespace mixlat

#endif  // MIXLAT_ELEMENT_HPP
