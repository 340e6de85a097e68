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

#ifndef MIXLAT_STRUCTURE_HPP
#define MIXLAT_STRUCTURE_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixlat/carrier.hpp"
#include "mixlat/errors.hpp"
#include "mixlat/order.hpp"
#include "mixlat/verdict.hpp"
#include "mixlat/window.hpp"

namespace mixlat {

/// Closed form for an envelope; nullopt claims the envelope does not exist.
using EnvelopeHint = std::function<std::optional<Element>(const Element&, const Element&)>;

/// Facts proved by hand for a structure, used where a bounded search cannot
/// settle a universally quantified premise.
struct RecordedFacts {
  /// Archimedean violation (x, y) per order, indexed by Which.
  std::array<std::optional<std::pair<Element, Element>>, 2> archimedean_violation;
  std::array<std::string, 2> archimedean_proof;
  /// Element that is not a difference of two specific-positive elements.
  std::optional<Element> irregular;
  std::string irregular_proof;
};

/// Carrier with an initial order (<=) and a specific order (⊑).
class TwoOrderStructure {
 public:
  TwoOrderStructure(std::string name, Carrier carrier, OrderRelation initial,
                    OrderRelation specific, Window window);

  const std::string& name() const { return name_; }
  const Carrier& carrier() const { return carrier_; }
  const OrderRelation& initial() const { return initial_; }
  const OrderRelation& specific() const { return specific_; }
  const OrderRelation& order(Which w) const { return w == Which::Initial ? initial_ : specific_; }
  const Window& default_window() const { return window_; }
  bool is_group() const { return carrier_.has_negation(); }

  bool le(const Element& x, const Element& y) const { return initial_.holds(carrier_, x, y); }
  bool sle(const Element& x, const Element& y) const { return specific_.holds(carrier_, x, y); }
  bool compare(Which w, const Element& x, const Element& y) const {
    return w == Which::Initial ? le(x, y) : sle(x, y);
  }

  Element add(const Element& a, const Element& b) const { return carrier_.add(a, b); }
  Element negate(const Element& a) const { return carrier_.negate(a); }
  Element sub(const Element& a, const Element& b) const { return carrier_.ambient_diff(a, b); }
  Element zero() const { return carrier_.zero(); }
  std::string format(const Element& e) const { return carrier_.format(e); }

  const EnvelopeHint& upper_hint() const { return upper_hint_; }
  const EnvelopeHint& lower_hint() const { return lower_hint_; }
  const RecordedFacts& facts() const { return facts_; }

  void set_hints(EnvelopeHint upper, EnvelopeHint lower) {
    upper_hint_ = std::move(upper);
    lower_hint_ = std::move(lower);
  }
  void set_facts(RecordedFacts f) { facts_ = std::move(f); }
  void set_window(Window w) { window_ = std::move(w); }

 private:
  std::string name_;
  Carrier carrier_;
  OrderRelation initial_;
  OrderRelation specific_;
  Window window_;
  EnvelopeHint upper_hint_;
  EnvelopeHint lower_hint_;
  RecordedFacts facts_;
};

using StructurePtr = std::shared_ptr<const TwoOrderStructure>;

/// Raised when a structure fails validation; `check` names the property.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string check, Verdict v, const std::string& rendered)
      : Error("axiom violation: " + check + (rendered.empty() ? "" : ", witness " + rendered)),
        check_(std::move(check)),
        verdict_(std::move(v)) {}
  const std::string& check() const { return check_; }
  const Verdict& verdict() const { return verdict_; }

 private:
  std::string check_;
  Verdict verdict_;
};

/// Carrier invariants, order invariants and hint agreement on `w`.
/// Returns the name of the first failing check with its verdict, or
/// nothing when every check passes.
std::optional<std::pair<std::string, Verdict>> validate_structure(const TwoOrderStructure& s,
                                                                  const Window& w);

/// Validates on the default window and freezes the structure.
StructurePtr finalize_structure(TwoOrderStructure s);

/// Sub-semigroup on `subset` with the inherited orders, no negation, no hints.
TwoOrderStructure restrict_structure(const TwoOrderStructure& s, const PositiveSet& subset,
                                     std::string name);

std::vector<Element> enumerate_window(const TwoOrderStructure& s, const Window& w);

/// {x : 0 ⪯ x} as a positive set (a point list on finite carriers).
PositiveSet positive_cone(const TwoOrderStructure& s, Which which);

}  // namespace mixlat

#endif  // MIXLAT_STRUCTURE_HPP
