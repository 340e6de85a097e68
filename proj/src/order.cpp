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

#include "mixlat/order.hpp"

#include "mixlat/errors.hpp"

namespace mixlat {

OrderRelation OrderRelation::positive(PositiveSet p) {
  OrderRelation o;
  o.kind_ = Kind::Positive;
  o.positive_ = std::move(p);
  return o;
}

OrderRelation OrderRelation::pairs(std::vector<std::pair<Element, Element>> ps) {
  OrderRelation o;
  o.kind_ = Kind::Pairs;
  o.pairs_ = std::move(ps);
  return o;
}

OrderRelation OrderRelation::table(std::vector<std::vector<bool>> t) {
  OrderRelation o;
  o.kind_ = Kind::Table;
  o.matrix_ = std::move(t);
  return o;
}

void OrderRelation::bind(const Carrier& c) {
  if (c.kind() != CarrierKind::Finite) {
    if (kind_ != Kind::Positive)
      throw Error("explicit pairs or tables need a finite carrier");
    return;
  }
  const int n = static_cast<int>(c.size());
  if (kind_ == Kind::Table) {
    if (static_cast<int>(matrix_.size()) != n) throw Error("order table is not n x n");
    for (const auto& r : matrix_)
      if (static_cast<int>(r.size()) != n) throw Error("order table is not n x n");
    return;
  }
  matrix_.assign(n, std::vector<bool>(n, false));
  if (kind_ == Kind::Pairs) {
    for (int i = 0; i < n; ++i) matrix_[i][i] = true;
    for (const auto& [a, b] : pairs_) {
      int i = c.index(a), j = c.index(b);
      if (i < 0 || j < 0) throw Error("order pair references an unknown element");
      matrix_[i][j] = true;
    }
    return;
  }
  for (int x = 0; x < n; ++x)
    for (int w = 0; w < n; ++w)
      if (positive_.contains(c.element(w))) matrix_[x][c.table()[x][w]] = true;
}

bool OrderRelation::holds(const Carrier& c, const Element& x, const Element& y) const {
  if (c.kind() == CarrierKind::Finite) {
    int i = c.index(x), j = c.index(y);
    if (i < 0 || j < 0) return false;
    return matrix_[i][j];
  }
  return positive_.contains(c.ambient_diff(y, x));
}

}  // namespace mixlat
