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

#include "mixlat/axioms.hpp"

#include "mixlat/detail/graded.hpp"

namespace mixlat {
namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix relation(const TwoOrderStructure& s, Which which, const std::vector<Element>& q) {
  Matrix m(q.size(), std::vector<char>(q.size(), 0));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) m[i][j] = s.compare(which, q[i], q[j]);
  return m;
}

const char* order_name(Which w) { return w == Which::Initial ? "initial" : "specific"; }

Verdict finish(const TwoOrderStructure& s, const Window& w, std::vector<Element> witness,
               std::string note, std::size_t checked) {
  Verdict v = witness.empty() ? Verdict::holds(scope_of(s, w))
                              : Verdict::fails(std::move(witness), std::move(note), scope_of(s, w));
  v.checked = checked;
  return v;
}

Verdict cancellation(const TwoOrderStructure& s, Which which, const Window& w) {
  auto q = enumerate_window(s, w);
  std::vector<Element> wit;
  std::size_t checked = 0;
  std::string note;
  detail::for_each_graded(q, 3, [&](std::span<const int> t) {
    const Element &u = q[t[0]], &v = q[t[1]], &x = q[t[2]];
    ++checked;
    bool lhs = s.compare(which, u, v);
    bool rhs = s.compare(which, s.add(u, x), s.add(v, x));
    if (lhs != rhs) {
      wit = {u, v, x};
      note = lhs ? "translate breaks order" : "translate creates order";
      return true;
    }
    return false;
  });
  return finish(s, w, std::move(wit), note, checked);
}

Verdict natural(const TwoOrderStructure& s, Which which, const Window& w) {
  auto q = enumerate_window(s, w);
  const Carrier& c = s.carrier();
  std::vector<Element> all_finite;
  if (c.kind() == CarrierKind::Finite) all_finite = q;
  std::vector<Element> wit;
  std::size_t checked = 0;
  detail::for_each_graded(q, 2, [&](std::span<const int> t) {
    const Element &u = q[t[0]], &v = q[t[1]];
    ++checked;
    bool ordered = s.compare(which, u, v);
    bool reachable = false;
    if (c.kind() == CarrierKind::Finite) {
      for (const auto& x : all_finite)
        if (c.add(u, x) == v) {
          reachable = true;
          break;
        }
    } else {
      reachable = c.contains(c.ambient_diff(v, u));
    }
    if (ordered != reachable) {
      wit = {u, v};
      return true;
    }
    return false;
  });
  return finish(s, w, std::move(wit), "", checked);
}

}  // namespace

std::optional<Window> scope_of(const TwoOrderStructure& s, const Window& w) {
  if (s.carrier().kind() == CarrierKind::Finite) return std::nullopt;
  return w;
}

std::string axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::PoCompat: return "PO-COMPAT";
    case AxiomId::CancLeq: return "CANC-LEQ";
    case AxiomId::CancSleq: return "CANC-SLEQ";
    case AxiomId::NatordLeq: return "NATORD-LEQ";
    case AxiomId::NatordSleq: return "NATORD-SLEQ";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view text) {
  for (auto id : {AxiomId::PoCompat, AxiomId::CancLeq, AxiomId::CancSleq, AxiomId::NatordLeq,
                  AxiomId::NatordSleq})
    if (axiom_name(id) == text) return id;
  return std::nullopt;
}

Verdict check_axiom(const TwoOrderStructure& s, AxiomId id, const Window& w) {
  switch (id) {
    case AxiomId::PoCompat: {
      Verdict a = check_compatible(s, Which::Initial, w);
      if (!a.is_holds()) return a;
      Verdict b = check_compatible(s, Which::Specific, w);
      b.checked += a.checked;
      return b;
    }
    case AxiomId::CancLeq: return cancellation(s, Which::Initial, w);
    case AxiomId::CancSleq: return cancellation(s, Which::Specific, w);
    case AxiomId::NatordLeq: return natural(s, Which::Initial, w);
    case AxiomId::NatordSleq: return natural(s, Which::Specific, w);
  }
  return Verdict::unknown("unknown axiom");
}

Verdict check_reflexive(const TwoOrderStructure& s, Which which, const Window& w) {
  auto q = enumerate_window(s, w);
  for (const auto& x : q)
    if (!s.compare(which, x, x)) return finish(s, w, {x}, order_name(which), q.size());
  return finish(s, w, {}, "", q.size());
}

Verdict check_antisymmetric(const TwoOrderStructure& s, Which which, const Window& w) {
  auto q = enumerate_window(s, w);
  Matrix m = relation(s, which, q);
  std::vector<Element> wit;
  std::size_t checked = 0;
  detail::for_each_graded(q, 2, [&](std::span<const int> t) {
    ++checked;
    if (t[0] != t[1] && m[t[0]][t[1]] && m[t[1]][t[0]]) {
      wit = {q[t[0]], q[t[1]]};
      return true;
    }
    return false;
  });
  return finish(s, w, std::move(wit), order_name(which), checked);
}

Verdict check_transitive(const TwoOrderStructure& s, Which which, const Window& w) {
  auto q = enumerate_window(s, w);
  Matrix m = relation(s, which, q);
  std::vector<Element> wit;
  std::size_t checked = 0;
  detail::for_each_graded(q, 3, [&](std::span<const int> t) {
    ++checked;
    if (m[t[0]][t[1]] && m[t[1]][t[2]] && !m[t[0]][t[2]]) {
      wit = {q[t[0]], q[t[1]], q[t[2]]};
      return true;
    }
    return false;
  });
  return finish(s, w, std::move(wit), order_name(which), checked);
}

Verdict check_compatible(const TwoOrderStructure& s, Which which, const Window& w) {
  auto q = enumerate_window(s, w);
  Matrix m = relation(s, which, q);
  std::vector<Element> wit;
  std::size_t checked = 0;
  detail::for_each_graded(q, 3, [&](std::span<const int> t) {
    if (!m[t[0]][t[1]]) return false;
    ++checked;
    if (!s.compare(which, s.add(q[t[0]], q[t[2]]), s.add(q[t[1]], q[t[2]]))) {
      wit = {q[t[0]], q[t[1]], q[t[2]]};
      return true;
    }
    return false;
  });
  return finish(s, w, std::move(wit), order_name(which), checked);
}

}  // namespace mixlat
