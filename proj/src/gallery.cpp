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

#include "mixlat/gallery.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mixlat/laws.hpp"
#include "mixlat/spec_io.hpp"

namespace mixlat {

namespace {

Rational first(const Element& e) { return e.coords[0]; }
Rational rmax(Rational a, Rational b) { return a < b ? b : a; }
Rational rmin(Rational a, Rational b) { return a < b ? a : b; }

std::int64_t parity(std::int64_t v) { return ((v % 2) + 2) % 2; }

// ---- spec texts ---------------------------------------------------------

const char* kMod3 = R"(# Nonnegative integers; <= is the cone of multiples of 3, ⊑ the usual order.
[structure]
name = nonneg-integers-mod3-cone

[carrier]
kind = grid
rank = 1
integral = true
negation = false
domain = lin: x1 >= 0

[order.initial]
positive = lin: x1 >= 0 & mod: x1 = 0 (mod 3)

[order.specific]
positive = lin: x1 >= 0

[window]
bounds = [0,12]
q = 1
pad = 12
)";

const char* kHalflineG = R"(# Rational line; ⊑ has positive set {0} ∪ [2,∞).
[structure]
name = halfline-gap-G

[carrier]
kind = grid
rank = 1
integral = false
negation = true

[order.initial]
positive = lin: x1 >= 0

[order.specific]
positive = points: 0 | lin: x1 >= 2

[window]
bounds = [-8,8]
q = 2
pad = 8
)";

const char* kHalflineM = R"(# The sub-semigroup {0} ∪ [2,∞) of halfline-gap-G.
[structure]
name = halfline-gap-M

[carrier]
kind = grid
rank = 1
integral = false
negation = false
domain = points: 0 | lin: x1 >= 2

[order.initial]
positive = lin: x1 >= 0

[order.specific]
positive = points: 0 | lin: x1 >= 2

[window]
bounds = [0,8]
q = 1
pad = 8
)";

const char* kDoubleLex = R"(# Z^2 with lexicographic orders led by the first and by the second coordinate.
[structure]
name = double-lex

[carrier]
kind = grid
rank = 2
integral = true
negation = true

[order.initial]
positive = lin: x1 > 0 | eq: x1 = 0 & lin: x2 >= 0

[order.specific]
positive = lin: x2 > 0 | eq: x2 = 0 & lin: x1 >= 0

[window]
bounds = [-4,4];[-4,4]
q = 1
pad = 8
)";

const char* kR3 = R"(# Q^3 with two planar cones: <= spanned by (1,0,1),(-1,0,1), ⊑ by (0,1,1),(0,-1,1).
[structure]
name = r3-two-cones

[carrier]
kind = grid
rank = 3
integral = false
negation = true

[order.initial]
positive = eq: x2 = 0 & lin: x3 - x1 >= 0 & lin: x3 + x1 >= 0

[order.specific]
positive = eq: x1 = 0 & lin: x3 - x2 >= 0 & lin: x3 + x2 >= 0

[window]
bounds = [-1,1];[-1,1];[-1,1]
q = 1
pad = 5
)";

const char* kLexDiag = R"(# Q^2 with the lexicographic order and the cone x2 >= |x1|.
[structure]
name = lex-diagcone

[carrier]
kind = grid
rank = 2
integral = false
negation = true

[order.initial]
positive = lin: x1 > 0 | eq: x1 = 0 & lin: x2 >= 0

[order.specific]
positive = lin: x2 - x1 >= 0 & lin: x2 + x1 >= 0

[window]
bounds = [-4,4];[-4,4]
q = 1
pad = 10
)";

const char* kDiagStep = R"(# Z^2; <= has positive set {(0,0),(1,1)} ∪ [2,∞)^2, ⊑ the nonnegative diagonal.
[structure]
name = diag-step

[carrier]
kind = grid
rank = 2
integral = true
negation = true

[order.initial]
positive = points: (0,0),(1,1) | lin: x1 >= 2 & lin: x2 >= 2

[order.specific]
positive = lin: x1 >= 0 & eq: x1 - x2 = 0

[window]
bounds = [-4,4];[-4,4]
q = 1
pad = 12
)";

const char* kTorsion = R"(# Z x Z_2; ⊑-positive elements are k(1,1) for k >= 0.
[structure]
name = torsion-z2

[carrier]
kind = grid
rank = 1
moduli = 2
integral = true
negation = true

[order.initial]
positive = lin: x1 > 0 | eq: x1 = 0 & eq: t1 = 0

[order.specific]
positive = lin: x1 >= 0 & mod: x1 - t1 = 0 (mod 2)

[window]
bounds = [-6,6]
q = 1
pad = 14
)";

// ---- hints ---------------------------------------------------------------

void mod3_hints(TwoOrderStructure& s) {
  s.set_hints(
      [](const Element& x, const Element& y) -> std::optional<Element> {
        Rational k = ceil_int(rmax(0, first(x) - first(y)) / 3);
        return Element{first(y) + 3 * k};
      },
      [](const Element& x, const Element& y) -> std::optional<Element> {
        Rational k = ceil_int(rmax(0, first(y) - first(x)) / 3);
        Rational z = first(y) - 3 * k;
        if (z < 0) return std::nullopt;
        return Element{z};
      });
}

std::optional<Element> halfline_upper(const Element& x, const Element& y) {
  if (first(y) <= first(x)) return x;
  return Element{rmax(first(x) + 2, first(y))};
}

void halfline_hints(TwoOrderStructure& s, bool group) {
  if (group) {
    s.set_hints(halfline_upper, [](const Element& x, const Element& y) -> std::optional<Element> {
      if (first(x) <= first(y)) return x;
      return Element{rmin(first(x) - 2, first(y))};
    });
    return;
  }
  s.set_hints(halfline_upper, [](const Element& x, const Element& y) -> std::optional<Element> {
    if (first(x) <= first(y)) return x;
    Rational m = rmin(first(y), first(x) - 2);
    return Element{m >= 2 ? m : Rational(0)};
  });
}

void double_lex_hints(TwoOrderStructure& s) {
  s.set_hints(
      [](const Element& x, const Element& y) -> std::optional<Element> {
        Rational bump = y.coords[0] < x.coords[0] ? 1 : 0;
        return Element{y.coords[0], rmax(y.coords[1], x.coords[1] + bump)};
      },
      [](const Element& x, const Element& y) -> std::optional<Element> {
        Rational bump = y.coords[0] > x.coords[0] ? 1 : 0;
        return Element{y.coords[0], rmin(y.coords[1], x.coords[1] - bump)};
      });
}

void r3_hints(TwoOrderStructure& s) {
  s.set_hints(
      [](const Element& x, const Element& y) -> std::optional<Element> {
        Rational t = rmax(abs(y.coords[0] - x.coords[0]),
                          abs(y.coords[1] - x.coords[1]) - (y.coords[2] - x.coords[2]));
        return Element{x.coords[0], y.coords[1], y.coords[2] + t};
      },
      [](const Element& x, const Element& y) -> std::optional<Element> {
        Rational t = rmax(abs(x.coords[0] - y.coords[0]),
                          abs(x.coords[1] - y.coords[1]) - (x.coords[2] - y.coords[2]));
        return Element{x.coords[0], y.coords[1], y.coords[2] - t};
      });
}

void lex_diag_hints(TwoOrderStructure& s) {
  s.set_hints(
      [](const Element& x, const Element& y) -> std::optional<Element> {
        return Element{y.coords[0], rmax(y.coords[1], x.coords[1] + abs(y.coords[0] - x.coords[0]))};
      },
      [](const Element& x, const Element& y) -> std::optional<Element> {
        return Element{y.coords[0], rmin(y.coords[1], x.coords[1] - abs(x.coords[0] - y.coords[0]))};
      });
}

// Least t >= 0 with d + t(1,1) in the <= cone of diag-step.
Rational diag_step_shift(Rational d1, Rational d2) {
  if (d1 == d2) return rmax(0, -d1);
  return rmax(0, rmax(2 - d1, 2 - d2));
}

void diag_step_hints(TwoOrderStructure& s) {
  s.set_hints(
      [](const Element& x, const Element& y) -> std::optional<Element> {
        Rational t = diag_step_shift(x.coords[0] - y.coords[0], x.coords[1] - y.coords[1]);
        return Element{x.coords[0] + t, x.coords[1] + t};
      },
      [](const Element& x, const Element& y) -> std::optional<Element> {
        Rational t = diag_step_shift(y.coords[0] - x.coords[0], y.coords[1] - x.coords[1]);
        return Element{x.coords[0] - t, x.coords[1] - t};
      });
}

// Least k >= 0 with d + k(1,1) in the <= cone of torsion-z2.
std::int64_t torsion_shift(std::int64_t d1, std::int64_t d2) {
  if (d1 <= 0 && parity(d2 - d1) == 0) return -d1;
  return std::max<std::int64_t>(0, 1 - d1);
}

void torsion_hints(TwoOrderStructure& s) {
  auto shift = [](const Element& base, const Element& other, int sign) {
    std::int64_t d1 = (sign * (base.coords[0] - other.coords[0])).numerator();
    std::int64_t d2 = sign * (base.tors[0] - other.tors[0]);
    std::int64_t k = torsion_shift(d1, d2);
    return Element(Coords{base.coords[0] + sign * k}, Residues{parity(base.tors[0] + sign * k)});
  };
  s.set_hints([shift](const Element& x, const Element& y) -> std::optional<Element> { return shift(x, y, 1); },
              [shift](const Element& x, const Element& y) -> std::optional<Element> { return shift(x, y, -1); });
}

// ---- expectation helpers -------------------------------------------------

struct Builder {
  GalleryEntry& e;

  void add(std::string key, std::string expected, Origin o, std::string note,
           std::function<std::string(RegressionContext&)> fn) {
    e.expectations.push_back({std::move(key), std::move(expected), o, std::move(note), std::move(fn)});
  }

  void cls(ClassId id, std::string expected, Origin o, std::string note) {
    bool wit = expected.find("witness=") != std::string::npos;
    add("CLASS " + class_name(id), std::move(expected), o, std::move(note), [id, wit](RegressionContext& ctx) {
      return render_verdict(ctx.report().at(id), ctx.structure().carrier(), wit);
    });
  }

  void env(bool upper, std::string x, std::string y, std::string expected, Origin o, std::string note) {
    add(std::string(upper ? "UPPER " : "LOWER ") + x + " " + y, std::move(expected), o, std::move(note),
        [=](RegressionContext& ctx) {
          Element a = ctx.el(x), b = ctx.el(y);
          const EnvelopeResult& r = upper ? ctx.engine().upper(a, b) : ctx.engine().lower(a, b);
          return render_envelope(r, ctx.structure().carrier());
        });
  }

  void law(LawId id, int nmax, std::string expected, Origin o, std::string note) {
    bool wit = expected.find("witness=") != std::string::npos;
    add("LAW " + law_name(id), std::move(expected), o, std::move(note), [=](RegressionContext& ctx) {
      return render_verdict(check_law(ctx.engine(), id, nmax), ctx.structure().carrier(), wit);
    });
  }

  void law_at(LawId id, std::vector<std::string> tuple, std::int64_t n, std::string expected, Origin o,
              std::string note) {
    std::string key = "LAW " + law_name(id) + " AT";
    for (const auto& t : tuple) key += " " + t;
    if (law_scaled(id)) key += " n=" + std::to_string(n);
    add(std::move(key), std::move(expected), o, std::move(note), [=](RegressionContext& ctx) {
      std::vector<Element> els;
      for (const auto& t : tuple) els.push_back(ctx.el(t));
      return std::string(outcome_text(evaluate_law_at(ctx.engine(), id, els, n)));
    });
  }

  void groups(const char* mlg, const char* pn, const char* n, const char* pr, const char* qr, const char* r,
              Origin o, const std::string& note) {
    cls(ClassId::Mlg, mlg, o, note);
    cls(ClassId::PreNormal, pn, o, note);
    cls(ClassId::Normal, n, o, note);
    cls(ClassId::PreRegular, pr, o, note);
    cls(ClassId::QuasiRegular, qr, o, note);
    cls(ClassId::Regular, r, o, note);
  }

  // Laws every mixed lattice group satisfies.
  void group_laws(bool pre_normal) {
    for (LawId id : {LawId::P0, LawId::P5B, LawId::P1, LawId::P2, LawId::P3})
      law(id, 1, "HOLDS", Origin::Derived, "identity valid in every mixed lattice group");
    law(LawId::R0, 1, pre_normal ? "HOLDS" : "FAILS", Origin::Derived,
        "R0 holds exactly in pre-normal mixed lattice groups");
  }
};

std::string sup_text(RegressionContext& ctx, Which which, const char* a, const char* b) {
  EnvelopeResult r = ctx.engine().supremum(which, ctx.el(a), ctx.el(b));
  return render_envelope(r, ctx.structure().carrier());
}

StructurePtr finish(const char* text, const std::function<void(TwoOrderStructure&)>& decorate) {
  TwoOrderStructure s = build_unvalidated(parse_spec(text));
  decorate(s);
  return finalize_structure(std::move(s));
}

std::unique_ptr<GalleryEntry> make_entry(std::string_view name) {
  auto e = std::make_unique<GalleryEntry>();
  e->name = std::string(name);
  Builder b{*e};
  const Origin C = Origin::Cited, D = Origin::Derived;

  if (name == "nonneg-integers-mod3-cone") {
    e->spec_text = kMod3;
    e->description = "Nonnegative integers with <= given by the multiples of 3 and ⊑ the usual order.";
    e->structure = finish(kMod3, mod3_hints);
    b.cls(ClassId::AStructure, "HOLDS", C, "upper envelopes exist; y + 3⌈max(0,x−y)/3⌉");
    b.cls(ClassId::PositiveA, "FAILS witness=1", D, "1 is not a multiple of 3");
    b.cls(ClassId::WeakMls, "FAILS witness=(0,1)", D, "0∧1 has an empty defining set");
    b.cls(ClassId::Mls, "FAILS", D, "requires WEAK-MLS");
    b.cls(ClassId::BStructure, "FAILS", D, "<= is not the natural order: 1 = 0 + 1 but 0 ≰ 1");
    b.cls(ClassId::PositiveB, "FAILS", D, "requires B-STRUCTURE");
    b.env(false, "1", "2", "none nonexistent-in-window (empty)", C, "1∧2 does not exist");
    b.env(true, "2", "1", "4 window-verified", D, "1 + 3⌈1/3⌉");
    b.env(true, "1", "2", "2 window-verified", D, "y when x <= y");
    b.law(LawId::PosA, 1, "FAILS", D, "agrees with POSITIVE-A");
  } else if (name == "halfline-gap-G") {
    e->spec_text = kHalflineG;
    e->description =
        "Rational line with the usual <= and ⊑ positive set {0} ∪ [2,∞); real interval replaced by its "
        "rational points, all cited values are rational.";
    e->structure = finish(kHalflineG, [](TwoOrderStructure& s) { halfline_hints(s, true); });
    b.groups("HOLDS", "HOLDS", "HOLDS", "HOLDS", "FAILS", "FAILS", D,
             "G_sp ⊆ G_p; G_sp is not closed under ∧ (3∧2 = 1)");
    b.env(false, "3", "2", "1 window-verified", C, "3∧2 = 1 in G");
    b.env(true, "2", "3", "4 window-verified", D, "max(x+2, y)");
    b.env(true, "0", "1", "2 window-verified", D, "max(x+2, y)");
    b.add("ABS 1", "ul=1 lu=3", D, "x∨0 + 0∨(−x) = 1 + 0; 0∨x + (−x)∨0 = 2 + 1", [](RegressionContext& ctx) {
      auto [ul, lu] = abs_asym(ctx.engine(), ctx.el("1"));
      return "ul=" + ctx.structure().format(ul) + " lu=" + ctx.structure().format(lu);
    });
    b.group_laws(true);
    b.law(LawId::ScaleLow, 2, "FAILS witness=(0,-1/2) n=2", D, "0∧(−1) = −2 while 2(0∧(−1/2)) = −4");
    b.law_at(LawId::ScaleLow, {"3", "2"}, 2, "FAILS", D, "6∧4 = 4 while 2(3∧2) = 2");
  } else if (name == "halfline-gap-M") {
    e->spec_text = kHalflineM;
    e->description =
        "The sub-semigroup {0} ∪ [2,∞) of halfline-gap-G with both orders inherited; envelopes are taken "
        "inside the semigroup.";
    e->structure = finish(kHalflineM, [](TwoOrderStructure& s) { halfline_hints(s, false); });
    b.cls(ClassId::AStructure, "HOLDS", D, "naturally ⊑-ordered, cancellative, upper envelopes exist");
    b.cls(ClassId::PositiveA, "HOLDS", D, "every element is >= 0");
    b.cls(ClassId::WeakMls, "HOLDS", C, "weak mixed lattice semigroup");
    b.cls(ClassId::Mls, "FAILS", C, "2∨3 + 3∧2 = 4 + 0 ≠ 5");
    b.cls(ClassId::BStructure, "FAILS", D, "<= is not the natural order (3 − 2 = 1 is outside M)");
    b.env(false, "3", "2", "0 window-verified", C, "3∧2 = 0 in M");
    b.env(false, "5", "4", "3 window-verified", C, "(3+2)∧(2+2) = 3");
    b.law(LawId::TransLow, 1, "FAILS witness=(3,2,2)", C, "translation by 2 changes 3∧2");
    b.law(LawId::WmlsIneq, 1, "HOLDS", D, "holds in every weak mixed lattice semigroup");
  } else if (name == "double-lex") {
    e->spec_text = kDoubleLex;
    e->description = "Z^2 with the lexicographic order led by x1 as <= and led by x2 as ⊑.";
    e->structure = finish(kDoubleLex, double_lex_hints);
    b.groups("HOLDS", "FAILS witness=(-1,1)", "FAILS", "FAILS", "FAILS", "FAILS", D,
             "(−1,1) ⊒ 0 but (−1,1) < 0; later classes require PRE-NORMAL");
    b.env(true, "(1,1)", "(0,1)", "(0,2) window-verified", C, "y∨x = (0,2) for x = (0,1), y = (1,1)");
    b.add("F-DIFFERENCE", "(-1,1) outside F", C, "y∨x − y is not in F = G_sp ∩ G_p",
          [](RegressionContext& ctx) {
            const TwoOrderStructure& s = ctx.structure();
            Element y = ctx.el("(1,1)");
            const EnvelopeResult& r = ctx.engine().upper(y, ctx.el("(0,1)"));
            if (!r.found()) return std::string("unresolved");
            Element d = s.sub(*r.value, y);
            bool in_f = s.le(s.zero(), d) && s.sle(s.zero(), d);
            return s.format(d) + (in_f ? " in F" : " outside F");
          });
    b.add("A-SUBSTRUCTURE F", "FAILS witness=((1,0),(0,0))", D,
          "least graded pair with x∨y − x outside F: (1,0)∨(0,0) − (1,0) = (−1,1)", [](RegressionContext& ctx) {
            const TwoOrderStructure& s = ctx.structure();
            PositiveSet f = positive_cone(s, Which::Initial).intersect(positive_cone(s, Which::Specific));
            return render_verdict(classify_subset(ctx.engine(), f, SubsetKind::ASubstructure), s.carrier());
          });
    b.group_laws(false);
  } else if (name == "r3-two-cones") {
    e->spec_text = kR3;
    e->description =
        "Q^3 with <= the cone spanned by (1,0,1),(−1,0,1) and ⊑ the cone spanned by (0,1,1),(0,−1,1); "
        "real space replaced by rational points, the cones are rational.";
    e->structure = finish(kR3, r3_hints);
    b.groups("HOLDS", "HOLDS", "FAILS", "FAILS", "FAILS", "FAILS", C,
             "pre-normal mixed lattice group that is not normal");
    b.env(true, "(0,0,0)", "(1,0,0)", "(0,0,1) window-verified", D, "(x1, y2, y3 + max(|y1−x1|, |y2−x2|−(y3−x3)))");
    b.env(false, "(0,0,0)", "(1,0,0)", "(0,0,-1) window-verified", D, "(x1, y2, y3 − max(|x1−y1|, |x2−y2|−(x3−y3)))");
    b.group_laws(true);
  } else if (name == "lex-diagcone") {
    e->spec_text = kLexDiag;
    e->description =
        "Q^2 with the lexicographic order as <= and the cone x2 >= |x1| as ⊑; real plane replaced by "
        "rational points, the cited values are integral.";
    e->structure = finish(kLexDiag, lex_diag_hints);
    b.groups("HOLDS", "FAILS witness=(-1,1)", "FAILS", "FAILS", "FAILS", "FAILS", C,
             "(−1,1) ∈ G_sp ∩ −G_p");
    b.env(true, "(-1,1)", "(1,1)", "(1,3) window-verified", C, "u∨v = (1,3)");
    b.add("SUM (-1,1) (1,1)", "(0,2)", C, "u + v = (0,2)", [](RegressionContext& ctx) {
      return ctx.structure().format(ctx.structure().add(ctx.el("(-1,1)"), ctx.el("(1,1)")));
    });
    auto g_sp = [](RegressionContext& ctx) {
      const TwoOrderStructure& s = ctx.structure();
      TwoOrderStructure sub = restrict_structure(s, positive_cone(s, Which::Specific), s.name() + "/sp");
      return finalize_structure(std::move(sub));
    };
    b.add("LAW POS-A ON G_sp", "FAILS witness=((-1,1),(-1,1))", D,
          "least graded pair with v∨u ≰ u+v inside G_sp", [g_sp](RegressionContext& ctx) {
            StructurePtr sp = g_sp(ctx);
            return render_verdict(check_law(sp, LawId::PosA, ctx.entry().window), sp->carrier());
          });
    b.add("LAW POS-A ON G_sp AT (1,1) (-1,1)", "FAILS", C,
          "u∨v = (1,3) ≰ (0,2) = u+v for u=(−1,1), v=(1,1); the tuple lists v first",
          [g_sp](RegressionContext& ctx) {
            StructurePtr sp = g_sp(ctx);
            EnvelopeEngine eng(sp, ctx.entry().window);
            return std::string(outcome_text(
                evaluate_law_at(eng, LawId::PosA, {ctx.el("(1,1)"), ctx.el("(-1,1)")})));
          });
    b.group_laws(false);
  } else if (name == "diag-step") {
    e->spec_text = kDiagStep;
    e->description =
        "Z^2 with <= positive set {(0,0),(1,1)} ∪ {x1 >= 2, x2 >= 2} and ⊑ the nonnegative diagonal.";
    e->structure = finish(kDiagStep, [](TwoOrderStructure& s) {
      diag_step_hints(s);
      RecordedFacts f;
      f.archimedean_violation[0] = std::make_pair(Element{0, -1}, Element{2, 2});
      f.archimedean_proof[0] = "(2,2) − n(0,−1) = (2,2+n) has both coordinates >= 2 for every n >= 1";
      f.irregular = Element{1, 0};
      f.irregular_proof = "G_p ∩ G_sp lies on the diagonal, so differences of its elements do too";
      s.set_facts(f);
    });
    b.groups("HOLDS", "HOLDS", "HOLDS", "HOLDS", "HOLDS", "FAILS", D,
             "quasi-regular; (1,0) is not a difference of doubly positive elements");
    b.law(LawId::DivLeq, 2, "FAILS witness=(1,2) n=2", C, "2u >= 0 but u >= 0 fails for u = (1,2)");
    b.add("ARCHIMEDEAN <=", "FAILS witness=((0,-1),(2,2))", D, "n(0,−1) <= (2,2) for all n",
          [](RegressionContext& ctx) {
            return render_verdict(check_archimedean(ctx.engine(), Which::Initial), ctx.structure().carrier());
          });
    b.group_laws(true);
  } else if (name == "torsion-z2") {
    e->spec_text = kTorsion;
    e->description =
        "Z × Z_2 with componentwise addition; (x,y) >= 0 iff x > 0 or (x,y) = (0,0); (x,y) ⊒ 0 iff "
        "x >= 0 and y ≡ x (mod 2).";
    e->structure = finish(kTorsion, [](TwoOrderStructure& s) {
      torsion_hints(s);
      RecordedFacts f;
      f.archimedean_violation[0] = std::make_pair(Element(Coords{0}, Residues{1}), Element(Coords{1}, Residues{0}));
      f.archimedean_proof[0] = "(1,0) − n(0,1) has first coordinate 1 > 0 for every n";
      f.irregular = Element(Coords{0}, Residues{1});
      f.irregular_proof = "G_p ∩ G_sp = {k(1,1)}, whose differences have matching parity";
      s.set_facts(f);
    });
    b.groups("HOLDS", "HOLDS", "HOLDS", "HOLDS", "HOLDS", "FAILS", C,
             "quasi-regular but not regular");
    b.add("FINITE-ORDER", "(0,1) order=2", C, "(0,1) has order 2", [](RegressionContext& ctx) {
      std::string out;
      for (const auto& [x, k] : finite_order_elements(ctx.structure(), ctx.entry().window, 8))
        out += (out.empty() ? "" : " ") + ctx.structure().format(x) + " order=" + std::to_string(k);
      return out.empty() ? std::string("none") : out;
    });
    b.add("ARCHIMEDEAN <=", "FAILS witness=((0,1),(1,0))", C, "n(0,1) <= (1,0) for all n",
          [](RegressionContext& ctx) {
            return render_verdict(check_archimedean(ctx.engine(), Which::Initial), ctx.structure().carrier());
          });
    b.add("ARCHIMEDEAN ⊑", "HOLDS", C, "⊑ is Archimedean", [](RegressionContext& ctx) {
      return render_verdict(check_archimedean(ctx.engine(), Which::Specific), ctx.structure().carrier());
    });
    b.add("SUP <= (0,0) (0,1)", "none nonexistent-in-window (no extremum)", C, "no least common upper bound",
          [](RegressionContext& ctx) { return sup_text(ctx, Which::Initial, "(0,0)", "(0,1)"); });
    b.add("SUP ⊑ (0,0) (0,1)", "none nonexistent-in-window (empty)", C, "no common upper bound",
          [](RegressionContext& ctx) { return sup_text(ctx, Which::Specific, "(0,0)", "(0,1)"); });
    b.law(LawId::DivSleq, 2, "FAILS witness=(0,1) n=2", D, "2(0,1) = 0 ⊒ 0 but (0,1) ⋣ 0");
    b.law_at(LawId::DivSleq, {"(1,0)"}, 2, "FAILS", C, "2(1,0) ⊒ 0 but (1,0) ⋣ 0");
    b.group_laws(true);
  } else {
    throw UsageError("unknown gallery entry '" + std::string(name) + "'");
  }
  e->window = e->structure->default_window();
  return e;
}

}  // namespace

const std::vector<std::string>& gallery_list() {
  static const std::vector<std::string> names = {
      "nonneg-integers-mod3-cone", "halfline-gap-G", "halfline-gap-M", "double-lex",
      "r3-two-cones",              "lex-diagcone",   "diag-step",      "torsion-z2"};
  return names;
}

bool gallery_has(std::string_view name) {
  const auto& l = gallery_list();
  return std::find(l.begin(), l.end(), name) != l.end();
}

const GalleryEntry& build_gallery(std::string_view name) {
  if (!gallery_has(name)) throw UsageError("unknown gallery entry '" + std::string(name) + "'");
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<GalleryEntry>, std::less<>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(std::string(name), make_entry(name)).first;
  return *it->second;
}

RegressionContext::RegressionContext(const GalleryEntry& e) : entry_(e), engine_(e.structure, e.window) {}

const ClassificationReport& RegressionContext::report() {
  if (!report_) report_ = classify_structure(engine_);
  return *report_;
}

std::string render_verdict(const Verdict& v, const Carrier& c, bool with_witness) {
  std::string out = outcome_text(v.outcome);
  if (with_witness && v.is_fails()) {
    if (!v.witness.empty()) out += " witness=" + format_witness(c, v.witness);
    static const char* names[] = {"n", "m"};
    for (std::size_t i = 0; i < v.multipliers.size() && i < 2; ++i)
      out += std::string(" ") + names[i] + "=" + std::to_string(v.multipliers[i]);
  }
  if (v.unsupported) out += " note=unsupported";
  return out;
}

std::string render_envelope(const EnvelopeResult& r, const Carrier& c) {
  std::string value = r.value ? c.format(*r.value) : "none";
  return value + " " + certificate_text(r.cert);
}

RegressionResult run_regression(std::string_view name) {
  const GalleryEntry& e = build_gallery(name);
  RegressionContext ctx(e);
  RegressionResult out;
  out.name = e.name;
  std::string bad;
  for (const Expectation& x : e.expectations) {
    ExpectationResult r{x.key, x.expected, {}, x.origin, false};
    try {
      r.actual = x.actual(ctx);
    } catch (const Error& err) {
      r.actual = std::string("error: ") + err.what();
    }
    r.ok = r.actual == r.expected;
    if (!r.ok) bad += (bad.empty() ? "" : "; ") + x.key;
    out.results.push_back(std::move(r));
  }
  out.summary = bad.empty() ? Verdict::holds(e.window) : Verdict::fails({}, "mismatch: " + bad, e.window);
  return out;
}

std::string format_regression(const RegressionResult& r) {
  std::string out = "ENTRY: " + r.name + "\n";
  for (const auto& x : r.results) {
    out += "EXPECT " + x.key + ": " + (x.ok ? "MATCH" : "MISMATCH") + " expected=" + x.expected;
    if (!x.ok) out += " actual=" + x.actual;
    out += std::string(" origin=") + (x.origin == Origin::Cited ? "cited" : "derived") + "\n";
  }
  out += std::string("REGRESSION ") + r.name + ": " + outcome_text(r.summary.outcome) + "\n";
  return out;
}

}  // namespace mixlat
