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

#ifndef MIXLAT_CARRIER_HPP
#define MIXLAT_CARRIER_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mixlat/clause.hpp"
#include "mixlat/element.hpp"

namespace mixlat {

enum class CarrierKind { Finite, Grid };

/// Underlying commutative monoid.
///
/// Grid carriers live inside the ambient group Q^n (or Z^n) x Z_m1 x ...,
/// optionally cut down to a sub-monoid by a `domain` predicate. Finite
/// carriers are given by an addition table over labelled elements.
class Carrier {
 public:
  using Predicate = std::function<bool(const Element&)>;

  static Carrier grid(std::size_t rank, std::vector<std::int64_t> moduli, bool integral,
                      bool negation, PositiveSet domain = PositiveSet::everything());
  /// `table[i][j]` is the index of labels[i] + labels[j]. Negation is
  /// available iff every element has an inverse and `negation` is requested.
  static Carrier finite(std::vector<std::string> labels, std::vector<std::vector<int>> table,
                        bool negation);

  CarrierKind kind() const { return kind_; }
  std::size_t rank() const { return rank_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  bool integral() const { return integral_; }
  bool has_negation() const { return negation_; }
  const PositiveSet& domain() const { return domain_; }
  bool restricted() const { return !domain_.is_everything() || extra_ != nullptr; }

  /// Extra membership test that is not expressible as a clause.
  Carrier with_extra_domain(Predicate p, std::string description) const;
  const std::string& extra_domain_description() const { return extra_text_; }
  bool has_extra_domain() const { return extra_ != nullptr; }

  Carrier with_domain(PositiveSet domain, bool negation) const;

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  int index(const Element& e) const;
  Element element(int idx) const;

  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  /// Difference b - a computed in the ambient group of a grid carrier.
  Element ambient_diff(const Element& b, const Element& a) const;
  Element ambient_negate(const Element& a) const;
  Element multiple(std::int64_t n, const Element& a) const;
  bool ambient_contains(const Element& e) const;
  bool contains(const Element& e) const;

  std::string format(const Element& e) const;
  /// Accepts "3", "1/2", "(1,2)", "(0,1)" or a finite label.
  Element parse_element(std::string_view text) const;

 private:
  Carrier() = default;

  CarrierKind kind_ = CarrierKind::Grid;
  std::size_t rank_ = 0;
  std::vector<std::int64_t> moduli_;
  bool integral_ = false;
  bool negation_ = false;
  PositiveSet domain_ = PositiveSet::everything();
  std::shared_ptr<Predicate> extra_;
  std::string extra_text_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int zero_index_ = 0;
};

}  // namespace mixlat

#endif  // MIXLAT_CARRIER_HPP
