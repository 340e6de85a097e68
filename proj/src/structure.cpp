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

#include "mixlat/structure.hpp"

#include <algorithm>

#include "mixlat/axioms.hpp"
#include "mixlat/detail/graded.hpp"
#include "mixlat/envelopes.hpp"

namespace mixlat {

TwoOrderStructure::TwoOrderStructure(std::string name, Carrier carrier, OrderRelation initial,
                                     OrderRelation specific, Window window)
    : name_(std::move(name)),
      carrier_(std::move(carrier)),
      initial_(std::move(initial)),
      specific_(std::move(specific)),
      window_(std::move(window)) {
  initial_.bind(carrier_);
  specific_.bind(carrier_);
}

std::vector<Element> enumerate_window(const TwoOrderStructure& s, const Window& w) {
  return enumerate_window(s.carrier(), w);
}

namespace {

using Failure = std::optional<std::pair<std::string, Verdict>>;

Failure carrier_checks(const TwoOrderStructure& s, const Window& w) {
  const Carrier& c = s.carrier();
  auto q = enumerate_window(s, w);
  auto scope = scope_of(s, w);
  const Element zero = c.zero();
  if (!c.contains(zero)) return std::make_pair("ZERO", Verdict::fails({zero}, "", scope));
  if (std::find(q.begin(), q.end(), zero) == q.end())
    return std::make_pair("WINDOW-ZERO", Verdict::fails({zero}, "window must contain zero", scope));
  for (const auto& x : q) {
    if (c.add(x, zero) != x || c.add(zero, x) != x)
      return std::make_pair("NEUTRAL", Verdict::fails({x}, "", scope));
    if (c.has_negation()) {
      Element n = c.negate(x);
      if (!c.contains(n) || c.add(x, n) != zero)
        return std::make_pair("NEGATION", Verdict::fails({x}, "", scope));
    }
  }
  Failure out;
  detail::for_each_graded(q, 2, [&](std::span<const int> t) {
    const Element &a = q[t[0]], &b = q[t[1]];
    Element ab = c.add(a, b);
    if (!c.contains(ab)) {
      out = std::make_pair("CLOSURE", Verdict::fails({a, b}, "", scope));
      return true;
    }
    if (ab != c.add(b, a)) {
      out = std::make_pair("COMMUTATIVITY", Verdict::fails({a, b}, "", scope));
      return true;
    }
    return false;
  });
  if (out) return out;
  const std::size_t limit = c.kind() == CarrierKind::Finite ? SIZE_MAX : 20000;
  std::size_t seen = 0;
  detail::for_each_graded(q, 3, [&](std::span<const int> t) {
    const Element &a = q[t[0]], &b = q[t[1]], &d = q[t[2]];
    if (c.add(c.add(a, b), d) != c.add(a, c.add(b, d))) {
      out = std::make_pair("ASSOCIATIVITY", Verdict::fails({a, b, d}, "", scope));
      return true;
    }
    return ++seen >= limit;
  });
  return out;
}

}  // namespace

std::optional<std::pair<std::string, Verdict>> validate_structure(const TwoOrderStructure& s,
                                                                  const Window& w) {
  if (auto f = carrier_checks(s, w)) return f;
  for (Which which : {Which::Initial, Which::Specific}) {
    std::string suffix = which == Which::Initial ? " (initial)" : " (specific)";
    if (auto v = check_reflexive(s, which, w); !v.is_holds()) return std::make_pair("reflexivity" + suffix, v);
    if (auto v = check_antisymmetric(s, which, w); !v.is_holds())
      return std::make_pair("antisymmetry" + suffix, v);
    if (auto v = check_transitive(s, which, w); !v.is_holds())
      return std::make_pair("transitivity" + suffix, v);
    if (auto v = check_compatible(s, which, w); !v.is_holds())
      return std::make_pair("compatibility" + suffix, v);
  }
  if (s.upper_hint() || s.lower_hint()) return verify_hints(s, w);
  return std::nullopt;
}

StructurePtr finalize_structure(TwoOrderStructure s) {
  if (auto f = validate_structure(s, s.default_window()))
    throw AxiomViolation(f->first, f->second, format_witness(s.carrier(), f->second.witness));
  return std::make_shared<const TwoOrderStructure>(std::move(s));
}

TwoOrderStructure restrict_structure(const TwoOrderStructure& s, const PositiveSet& subset,
                                     std::string name) {
  const Carrier& c = s.carrier();
  if (c.kind() == CarrierKind::Grid) {
    Carrier sub = c.with_domain(c.domain().intersect(subset), false);
    TwoOrderStructure out(std::move(name), sub, s.initial(), s.specific(), s.default_window());
    out.set_facts({});
    return out;
  }
  std::vector<int> keep;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (subset.contains(c.element(static_cast<int>(i)))) keep.push_back(static_cast<int>(i));
  std::vector<int> pos(c.size(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = static_cast<int>(k);
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(keep.size(), std::vector<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(c.labels()[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b) {
      int r = pos[c.table()[keep[a]][keep[b]]];
      if (r < 0) throw Error("subset is not closed under addition");
      table[a][b] = r;
    }
  }
  auto mat = [&](Which w) {
    std::vector<std::vector<bool>> m(keep.size(), std::vector<bool>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = 0; b < keep.size(); ++b)
        m[a][b] = s.compare(w, c.element(keep[a]), c.element(keep[b]));
    return m;
  };
  Carrier sub = Carrier::finite(std::move(labels), std::move(table), false);
  return TwoOrderStructure(std::move(name), sub, OrderRelation::table(mat(Which::Initial)),
                           OrderRelation::table(mat(Which::Specific)), Window{});
}

PositiveSet positive_cone(const TwoOrderStructure& s, Which which) {
  const Carrier& c = s.carrier();
  if (c.kind() == CarrierKind::Grid) return s.order(which).positive_set();
  std::vector<Element> pts;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Element e = c.element(static_cast<int>(i));
    if (s.compare(which, c.zero(), e)) pts.push_back(e);
  }
  return PositiveSet::of_points(std::move(pts));
}

}  // namespace mixlat
