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

#ifndef MIXLAT_ORDER_HPP
#define MIXLAT_ORDER_HPP

#include <utility>
#include <vector>

#include "mixlat/carrier.hpp"
#include "mixlat/clause.hpp"

namespace mixlat {

enum class Which { Initial, Specific };

/// Decidable partial order on a carrier.
///
/// A positive set P gives x <= y iff y - x is in P. On finite carriers the
/// difference is replaced by the existential "y = x + w for some w in P".
class OrderRelation {
 public:
  enum class Kind { Positive, Pairs, Table };

  static OrderRelation positive(PositiveSet p);
  /// Finite carriers only; reflexive pairs are implied.
  static OrderRelation pairs(std::vector<std::pair<Element, Element>> ps);
  static OrderRelation table(std::vector<std::vector<bool>> t);

  /// Precomputes the relation matrix on finite carriers.
  void bind(const Carrier& c);

  bool holds(const Carrier& c, const Element& x, const Element& y) const;

  Kind kind() const { return kind_; }
  const PositiveSet& positive_set() const { return positive_; }
  const std::vector<std::pair<Element, Element>>& pair_list() const { return pairs_; }
  const std::vector<std::vector<bool>>& matrix() const { return matrix_; }

 private:
  Kind kind_ = Kind::Positive;
  PositiveSet positive_;
  std::vector<std::pair<Element, Element>> pairs_;
  std::vector<std::vector<bool>> matrix_;
};

}  // namespace mixlat

#endif  // MIXLAT_ORDER_HPP
