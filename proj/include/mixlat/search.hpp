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

#ifndef MIXLAT_SEARCH_HPP
#define MIXLAT_SEARCH_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixlat/classify.hpp"

namespace mixlat {

/// Parses "WEAKER,STRONGER"; the pair must be adjacent in the implication
/// chain. Throws UsageError otherwise.
std::pair<ClassId, ClassId> parse_target(std::string_view text);

struct SearchOptions {
  int max_size = 4;
  std::pair<ClassId, ClassId> target{ClassId::AStructure, ClassId::PositiveA};
  /// Candidate structures classified before the search stops.
  std::size_t budget = 100000;
  /// Extra structures (with their windows) tried before the enumeration.
  std::vector<std::pair<StructurePtr, Window>> seeds;
  unsigned threads = 0;
};

struct SearchWitness {
  StructurePtr structure;
  Window window;
  ClassificationReport report;
  /// Spec document; reloading it reproduces the verdict pair.
  std::string spec;
};

struct SearchResult {
  std::vector<SearchWitness> witnesses;
  std::size_t monoids = 0;
  std::size_t examined = 0;
  /// The budget ran out before the enumeration finished.
  bool partial = false;
};

/// Commutative monoid tables on {0, ..., n-1} with 0 neutral, one per
/// isomorphism class, in canonical (lexicographically least) form and
/// sorted.
std::vector<std::vector<std::vector<int>>> canonical_monoids(int n, unsigned threads = 0);

/// Partial orders on the table's elements that are compatible with addition.
std::vector<std::vector<std::vector<bool>>> compatible_orders(const std::vector<std::vector<int>>& table,
                                                              std::size_t limit);

SearchResult search_small_structures(const SearchOptions& opts);

}  // namespace mixlat

#endif  // MIXLAT_SEARCH_HPP
