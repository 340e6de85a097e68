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

#include "mixlat/classify.hpp"

#include <algorithm>
#include <sstream>

#include "mixlat/axioms.hpp"
#include "mixlat/detail/quantify.hpp"

namespace mixlat {

using detail::quantify;
using detail::TupleOutcome;

namespace {

const std::vector<std::pair<ClassId, const char*>> kNames = {
    {ClassId::AStructure, "A-STRUCTURE"},   {ClassId::PositiveA, "POSITIVE-A"},
    {ClassId::WeakMls, "WEAK-MLS"},         {ClassId::Mls, "MLS"},
    {ClassId::BStructure, "B-STRUCTURE"},   {ClassId::PositiveB, "POSITIVE-B"},
    {ClassId::Mlg, "MLG"},                  {ClassId::PreNormal, "PRE-NORMAL"},
    {ClassId::Normal, "NORMAL"},            {ClassId::PreRegular, "PRE-REGULAR"},
    {ClassId::QuasiRegular, "QUASI-REGULAR"}, {ClassId::Regular, "REGULAR"}};

TupleOutcome envelope_state(const EnvelopeResult& r) {
  if (r.found()) return TupleOutcome::Holds;
  if (r.absent()) return TupleOutcome::Fails;
  return TupleOutcome::Undecided;
}

// Copies a prerequisite verdict onto a dependent class.
Verdict inherit(const Verdict& from, const std::string& what) {
  Verdict v = from;
  v.note = "requires " + what + (from.note.empty() ? "" : "; " + from.note);
  return v;
}

Verdict first_point(const EnvelopeEngine& eng, const std::function<bool(const Element&)>& bad,
                    const std::string& note) {
  auto scope = scope_of(eng.structure(), eng.window());
  return quantify(eng.quant(), 1, scope, true, [&](std::span<const int> idx, Verdict& out) {
    if (!bad(eng.quant()[idx[0]])) return TupleOutcome::Holds;
    out.note = note;
    return TupleOutcome::Fails;
  });
}

Verdict all_exist(EnvelopeEngine& eng, bool upper) {
  auto scope = scope_of(eng.structure(), eng.window());
  const auto& q = eng.quant();
  return quantify(q, 2, scope, true, [&](std::span<const int> idx, Verdict& out) {
    const EnvelopeResult& r = upper ? eng.upper(q[idx[0]], q[idx[1]]) : eng.lower(q[idx[0]], q[idx[1]]);
    TupleOutcome o = envelope_state(r);
    if (o == TupleOutcome::Fails) out.note = std::string(upper ? "upper" : "lower") + " envelope " + certificate_text(r.cert);
    return o;
  });
}

Verdict prerequisites(const TwoOrderStructure& s, const Window& w, AxiomId natord, AxiomId canc) {
  for (AxiomId id : {natord, canc}) {
    Verdict v = check_axiom(s, id, w);
    if (!v.is_holds()) {
      v.note = axiom_name(id) + (v.note.empty() ? "" : ": " + v.note);
      return v;
    }
  }
  return Verdict::holds(scope_of(s, w));
}

Verdict semigroup_side(EnvelopeEngine& eng, bool a_side) {
  const TwoOrderStructure& s = eng.structure();
  Verdict pre = a_side ? prerequisites(s, eng.window(), AxiomId::NatordSleq, AxiomId::CancLeq)
                       : prerequisites(s, eng.window(), AxiomId::NatordLeq, AxiomId::CancSleq);
  if (!pre.is_holds()) return pre;
  return all_exist(eng, true);
}

}  // namespace

std::string class_name(ClassId id) {
  for (auto& [k, n] : kNames)
    if (k == id) return n;
  return "?";
}

std::optional<ClassId> parse_class(std::string_view text) {
  for (auto& [k, n] : kNames)
    if (text == n) return k;
  return std::nullopt;
}

const std::vector<ClassId>& all_classes() {
  static const std::vector<ClassId> ids = [] {
    std::vector<ClassId> v;
    for (auto& [k, n] : kNames) v.push_back(k);
    return v;
  }();
  return ids;
}

const std::vector<std::pair<ClassId, ClassId>>& class_implications() {
  static const std::vector<std::pair<ClassId, ClassId>> chain = {
      {ClassId::AStructure, ClassId::PositiveA},   {ClassId::PositiveA, ClassId::WeakMls},
      {ClassId::WeakMls, ClassId::Mls},            {ClassId::BStructure, ClassId::PositiveB},
      {ClassId::Mlg, ClassId::PreNormal},          {ClassId::PreNormal, ClassId::Normal},
      {ClassId::Normal, ClassId::PreRegular},      {ClassId::PreRegular, ClassId::QuasiRegular},
      {ClassId::QuasiRegular, ClassId::Regular}};
  return chain;
}

const Verdict& ClassificationReport::at(ClassId id) const {
  for (auto& [k, v] : verdicts)
    if (k == id) return v;
  throw Error("class " + class_name(id) + " missing from report");
}

ClassificationReport classify_structure(EnvelopeEngine& eng) {
  const TwoOrderStructure& s = eng.structure();
  const Window& w = eng.window();
  auto scope = scope_of(s, w);
  ClassificationReport r;
  r.structure = s.name();
  r.window = scope;
  auto put = [&](ClassId id, Verdict v) { r.verdicts.emplace_back(id, std::move(v)); };

  // semigroup side
  Verdict a = semigroup_side(eng, true);
  put(ClassId::AStructure, a);
  Verdict pos_a = a.is_holds()
                      ? first_point(eng, [&](const Element& x) { return !s.le(s.zero(), x); }, "x >= 0 fails")
                      : inherit(a, "A-STRUCTURE");
  put(ClassId::PositiveA, pos_a);
  Verdict weak = a.is_holds() ? all_exist(eng, false) : inherit(a, "A-STRUCTURE");
  put(ClassId::WeakMls, weak);
  Verdict mls = weak;
  if (weak.is_holds()) {
    const auto& q = eng.quant();
    mls = quantify(q, 2, scope, true, [&](std::span<const int> idx, Verdict& out) {
      const Element& x = q[idx[0]];
      const Element& y = q[idx[1]];
      const EnvelopeResult& up = eng.upper(x, y);
      const EnvelopeResult& lo = eng.lower(y, x);
      if (!up.found() || !lo.found()) return TupleOutcome::Undecided;
      if (s.add(*up.value, *lo.value) == s.add(x, y)) return TupleOutcome::Holds;
      out.note = "x∨y + y∧x = x+y fails";
      return TupleOutcome::Fails;
    });
  } else {
    mls = inherit(weak, "WEAK-MLS");
  }
  put(ClassId::Mls, mls);
  Verdict b = semigroup_side(eng, false);
  put(ClassId::BStructure, b);
  put(ClassId::PositiveB,
      b.is_holds() ? first_point(eng, [&](const Element& x) { return !s.sle(s.zero(), x); }, "x ⊒ 0 fails")
                   : inherit(b, "B-STRUCTURE"));

  // group side
  if (!s.is_group()) {
    for (ClassId id : {ClassId::Mlg, ClassId::PreNormal, ClassId::Normal, ClassId::PreRegular,
                       ClassId::QuasiRegular, ClassId::Regular})
      put(id, Verdict::unsupported_op("group class on a carrier without negation"));
  } else {
    const auto& q = eng.quant();
    Verdict mlg = quantify(q, 1, scope, true, [&](std::span<const int> idx, Verdict& out) {
      const EnvelopeResult& e = eng.upper(q[idx[0]], s.zero());
      TupleOutcome o = envelope_state(e);
      if (o == TupleOutcome::Fails) out.note = "x∨0 " + certificate_text(e.cert);
      return o;
    });
    put(ClassId::Mlg, mlg);
    if (!mlg.is_holds()) {
      for (ClassId id : {ClassId::PreNormal, ClassId::Normal, ClassId::PreRegular,
                         ClassId::QuasiRegular, ClassId::Regular})
        put(id, inherit(mlg, "MLG"));
    } else {
      const Element zero = s.zero();
      auto in_sp = [&](const Element& x) { return s.sle(zero, x); };
      auto in_p = [&](const Element& x) { return s.le(zero, x); };
      put(ClassId::PreNormal,
          first_point(eng, [&](const Element& x) { return x != zero && in_sp(x) && s.le(x, zero); },
                      "x in G_sp ∩ −G_p"));
      Verdict sp_not_p = first_point(eng, [&](const Element& x) { return in_sp(x) && !in_p(x); },
                                     "G_sp ⊄ G_p");
      Verdict p_not_sp = first_point(eng, [&](const Element& x) { return in_p(x) && !in_sp(x); },
                                     "G_p ⊄ G_sp");
      Verdict normal = Verdict::holds(scope);
      if (sp_not_p.is_fails() && p_not_sp.is_fails()) {
        normal = Verdict::fails({sp_not_p.witness[0], p_not_sp.witness[0]},
                                "neither cone contains the other", scope);
      }
      put(ClassId::Normal, normal);
      put(ClassId::PreRegular, sp_not_p);
      Verdict qr = classify_subset(eng, positive_cone(s, Which::Specific), SubsetKind::MlSubsemigroup);
      put(ClassId::QuasiRegular, qr);
      Verdict reg = qr;
      if (!qr.is_holds()) {
        reg = inherit(qr, "QUASI-REGULAR");
      } else {
        // generating: every window point is u - v with u, v in G_sp
        std::vector<Element> cone;
        for (const Element& z : eng.box())
          if (in_sp(z)) cone.push_back(z);
        std::optional<Element> missing;
        for (const Element& x : eng.quant()) {
          bool found = false;
          for (const Element& v : cone) {
            Element u = s.add(x, v);
            if (eng.index_of(u) && in_sp(u)) {
              found = true;
              break;
            }
          }
          if (!found) {
            missing = x;
            break;
          }
        }
        if (!missing) {
          reg = Verdict::holds(scope);
        } else if (s.facts().irregular) {
          reg = Verdict::fails({*s.facts().irregular}, "G_sp not generating: " + s.facts().irregular_proof, scope);
        } else {
          reg = Verdict::unknown("no decomposition in window for " + s.format(*missing), scope);
        }
      }
      put(ClassId::Regular, reg);
    }
  }

  // implication chain
  for (auto& [weaker, stronger] : class_implications()) {
    const Verdict& hi = r.at(stronger);
    const Verdict& lo = r.at(weaker);
    if (hi.is_holds() && !lo.is_holds())
      throw InternalError(s.name() + ": " + class_name(stronger) + " holds but " + class_name(weaker) +
                          " does not");
  }

  Verdict canc_leq = check_axiom(s, AxiomId::CancLeq, w);
  Verdict natord_sleq = check_axiom(s, AxiomId::NatordSleq, w);
  if (canc_leq.is_holds() && natord_sleq.is_holds()) {
    Verdict canc_sleq = check_axiom(s, AxiomId::CancSleq, w);
    r.notes.push_back(std::string("CANC-SLEQ from CANC-LEQ and NATORD-SLEQ: ") + outcome_text(canc_sleq.outcome));
  }
  return r;
}

ClassificationReport classify_structure(const StructurePtr& s, const Window& w) {
  EnvelopeEngine eng(s, w);
  return classify_structure(eng);
}

std::string format_report(const ClassificationReport& r, const Carrier& c) {
  std::ostringstream out;
  out << "STRUCTURE: " << r.structure << "\n";
  out << "WINDOW: " << (r.window ? format_window(*r.window) : "full") << "\n";
  for (auto& [id, v] : r.verdicts) {
    Verdict shown = v;
    shown.scope.reset();
    out << format_verdict("CLASS " + class_name(id), shown, c) << "\n";
  }
  for (const auto& n : r.notes) out << "NOTE: " << n << "\n";
  return out.str();
}

std::string subset_kind_name(SubsetKind k) {
  switch (k) {
    case SubsetKind::ASubstructure: return "A-SUBSTRUCTURE";
    case SubsetKind::BSubstructure: return "B-SUBSTRUCTURE";
    case SubsetKind::MlSubsemigroup: return "ML-SUBSEMIGROUP";
    case SubsetKind::MlSubgroup: return "ML-SUBGROUP";
  }
  return "?";
}

std::optional<SubsetKind> parse_subset_kind(std::string_view text) {
  for (SubsetKind k : {SubsetKind::ASubstructure, SubsetKind::BSubstructure, SubsetKind::MlSubsemigroup,
                       SubsetKind::MlSubgroup})
    if (subset_kind_name(k) == text) return k;
  return std::nullopt;
}

Verdict classify_subset(EnvelopeEngine& g, const PositiveSet& sub, SubsetKind kind) {
  const TwoOrderStructure& s = g.structure();
  auto scope = scope_of(s, g.window());
  auto member = [&](const Element& x) { return s.carrier().contains(x) && sub.contains(x); };
  std::vector<Element> pts;
  for (const Element& x : g.quant())
    if (member(x)) pts.push_back(x);
  if (!member(s.zero())) throw UsageError("subset does not contain zero");
  for (const Element& x : pts)
    for (const Element& y : pts)
      if (!member(s.add(x, y)))
        throw UsageError("subset is not closed under addition: " + s.format(x) + " + " + s.format(y));
  const Element zero = s.zero();
  // cone containment
  if (kind == SubsetKind::ASubstructure || kind == SubsetKind::MlSubsemigroup ||
      kind == SubsetKind::BSubstructure) {
    bool specific = kind != SubsetKind::BSubstructure;
    Verdict v = quantify(pts, 1, scope, true, [&](std::span<const int> idx, Verdict& out) {
      if (s.compare(specific ? Which::Specific : Which::Initial, zero, pts[idx[0]])) return TupleOutcome::Holds;
      out.note = specific ? "not in G_sp" : "not in G_p";
      return TupleOutcome::Fails;
    });
    if (!v.is_holds()) return v;
  }
  if (kind == SubsetKind::MlSubgroup) {
    if (!s.is_group()) return Verdict::unsupported_op("ML-SUBGROUP needs a group");
    Verdict v = quantify(pts, 1, scope, true, [&](std::span<const int> idx, Verdict& out) {
      if (member(s.negate(pts[idx[0]]))) return TupleOutcome::Holds;
      out.note = "not closed under negation";
      return TupleOutcome::Fails;
    });
    if (!v.is_holds()) return v;
  }
  return quantify(pts, 2, scope, true, [&](std::span<const int> idx, Verdict& out) {
    const Element& x = pts[idx[0]];
    const Element& y = pts[idx[1]];
    bool undecided = false;
    const EnvelopeResult& up = g.upper(x, y);
    if (!up.found()) {
      undecided = true;
    } else {
      bool ok = true;
      switch (kind) {
        case SubsetKind::ASubstructure:
        case SubsetKind::MlSubsemigroup:
          ok = member(s.sub(*up.value, x));
          if (!ok) out.note = "x∨y − x not in subset";
          break;
        case SubsetKind::BSubstructure:
          ok = member(s.sub(*up.value, y));
          if (!ok) out.note = "x∨y − y not in subset";
          break;
        case SubsetKind::MlSubgroup:
          ok = member(*up.value);
          if (!ok) out.note = "x∨y not in subset";
          break;
      }
      if (!ok) return TupleOutcome::Fails;
    }
    if (kind == SubsetKind::MlSubsemigroup || kind == SubsetKind::MlSubgroup) {
      const EnvelopeResult& lo = g.lower(x, y);
      if (!lo.found()) {
        undecided = true;
      } else if (!member(*lo.value)) {
        out.note = "x∧y not in subset";
        return TupleOutcome::Fails;
      }
    }
    return undecided ? TupleOutcome::Undecided : TupleOutcome::Holds;
  });
}

Verdict classify_subset(const StructurePtr& g, const PositiveSet& sub, SubsetKind kind, const Window& w) {
  EnvelopeEngine eng(g, w);
  return classify_subset(eng, sub, kind);
}

RegularElements regular_elements(EnvelopeEngine& g) {
  const TwoOrderStructure& s = g.structure();
  if (!s.is_group()) throw UnsupportedOperation("regular elements need a group");
  auto scope = scope_of(s, g.window());
  const Element zero = s.zero();
  std::vector<Element> both;
  for (const Element& z : g.box())
    if (s.le(zero, z) && s.sle(zero, z)) both.push_back(z);
  auto regular = [&](const Element& x) {
    for (const Element& v : both) {
      Element u = s.add(x, v);
      if (g.index_of(u) && s.le(zero, u) && s.sle(zero, u)) return true;
    }
    return false;
  };
  RegularElements out;
  for (const Element& x : g.quant())
    if (regular(x)) out.elements.push_back(x);
  out.closure = quantify(out.elements, 2, scope, false, [&](std::span<const int> idx, Verdict& v) {
    const Element& a = out.elements[idx[0]];
    const Element& b = out.elements[idx[1]];
    const EnvelopeResult& up = g.upper(a, b);
    const EnvelopeResult& lo = g.lower(a, b);
    if (!up.found() || !lo.found()) return TupleOutcome::Undecided;
    if (!regular(*up.value)) {
      v.note = "x∨y not regular";
      return TupleOutcome::Fails;
    }
    if (!regular(*lo.value)) {
      v.note = "x∧y not regular";
      return TupleOutcome::Fails;
    }
    return TupleOutcome::Holds;
  });
  return out;
}

RegularElements regular_elements(const StructurePtr& g, const Window& w) {
  EnvelopeEngine eng(g, w);
  return regular_elements(eng);
}

}  // namespace mixlat
