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

#ifndef MIXLAT_DETAIL_QUANTIFY_HPP
#define MIXLAT_DETAIL_QUANTIFY_HPP

#include <optional>
#include <span>
#include <vector>

#include "mixlat/detail/graded.hpp"
#include "mixlat/verdict.hpp"

namespace mixlat::detail {

enum class TupleOutcome { Holds, Fails, Undecided };

/// Universal quantifier over k-tuples of `pts` in graded order. The first
/// failing tuple becomes the witness; `fn` may attach multipliers or a
/// note to `out` before returning Fails. Undecided tuples are counted.
/// With `strict`, any undecided tuple turns a would-be Holds into Unknown;
/// otherwise only a run with no decided tuple does.
template <class Fn>
Verdict quantify(const std::vector<Element>& pts, int k, std::optional<Window> scope, bool strict,
                 Fn&& fn) {
  Verdict v = Verdict::holds(scope);
  for_each_graded(pts, k, [&](std::span<const int> idx) {
    TupleOutcome o = fn(idx, v);
    if (o == TupleOutcome::Fails) {
      v.outcome = Outcome::Fails;
      for (int i : idx) v.witness.push_back(pts[i]);
      return true;
    }
    if (o == TupleOutcome::Undecided) ++v.undecided;
    else ++v.checked;
    return false;
  });
  if (v.outcome == Outcome::Holds && v.undecided > 0 && (strict || v.checked == 0)) {
    v.outcome = Outcome::Unknown;
    if (v.note.empty()) v.note = std::to_string(v.undecided) + " undecided tuples";
  }
  if (v.outcome != Outcome::Fails) v.multipliers.clear();
  return v;
}

}  // namespace mixlat::detail

#endif  // MIXLAT_DETAIL_QUANTIFY_HPP
