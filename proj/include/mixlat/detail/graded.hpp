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

#ifndef MIXLAT_DETAIL_GRADED_HPP
#define MIXLAT_DETAIL_GRADED_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "mixlat/element.hpp"

namespace mixlat::detail {

/// Visits k-tuples of indices into `elems` (sorted lexicographically) in
/// graded order: first by the largest grade in the tuple, then
/// lexicographically. `fn` returns true to stop; the return value reports
/// whether it stopped.
template <class Fn>
bool for_each_graded(const std::vector<Element>& elems, int k, Fn&& fn) {
  const int n = static_cast<int>(elems.size());
  if (n == 0 || k <= 0) return false;
  std::vector<Rational> g(n);
  for (int i = 0; i < n; ++i) g[i] = grade(elems[i]);
  std::vector<Rational> levels = g;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  // level number of each element
  std::vector<int> lv(n);
  for (int i = 0; i < n; ++i)
    lv[i] = static_cast<int>(std::lower_bound(levels.begin(), levels.end(), g[i]) - levels.begin());
  std::vector<int> sel;
  std::vector<int> pos(k), tuple(k);
  for (int level = 0; level < static_cast<int>(levels.size()); ++level) {
    sel.clear();
    for (int i = 0; i < n; ++i)
      if (lv[i] <= level) sel.push_back(i);
    const int m = static_cast<int>(sel.size());
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      bool top = false;
      for (int j = 0; j < k; ++j) {
        tuple[j] = sel[pos[j]];
        top = top || lv[tuple[j]] == level;
      }
      if (top && fn(std::span<const int>(tuple))) return true;
      int j = k - 1;
      while (j >= 0 && ++pos[j] == m) {
        pos[j] = 0;
        --j;
      }
      if (j < 0) break;
    }
  }
  return false;
}

}  // namespace mixlat::detail

#endif  // MIXLAT_DETAIL_GRADED_HPP
