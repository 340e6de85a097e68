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

#include <doctest.h>

#include <cstdlib>
#include <string>

#include "mixlat/axioms.hpp"
#include "mixlat/gallery.hpp"
#include "mixlat/spec_io.hpp"

using namespace mixlat;

namespace {

Carrier plane() { return Carrier::grid(2, {}, true, true); }

const char* kZ3 = R"([structure]
name = z3-trivial

[carrier]
kind = finite
elements = e0,e1,e2
add = e0,e1,e2; e1,e2,e0; e2,e0,e1
negation = true

[order.initial]
pairs = (e0,e0)

[order.specific]
pairs = (e0,e0)
)";

std::string rendered(const Verdict& v, const Carrier& c) { return format_verdict("X", v, c); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-5/3") == Rational(-5, 3));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("abc"));
  CHECK_FALSE(parse_rational(""));
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("rational rounding and mixed comparisons") {
  CHECK(floor_int(Rational(-1, 2)) == -1);
  CHECK(ceil_int(Rational(-1, 2)) == 0);
  CHECK(floor_int(Rational(7, 3)) == 2);
  CHECK(ceil_int(Rational(7, 3)) == 3);
  Rational z;
  CHECK(z == 0);
  CHECK(Rational(1, 2) != 0);
  CHECK(Rational(2) == 2);
  CHECK(abs(Rational(-2, 3)) == Rational(2, 3));
}

TEST_CASE("positive set clauses") {
  Carrier c = plane();
  PositiveSet p = parse_positive_set("lin: 2*x1 - x2 >= 3", c);
  CHECK(p.contains(Element{2, 1}));
  CHECK_FALSE(p.contains(Element{1, 0}));
  PositiveSet m = parse_positive_set("mod: x1 = 1 (mod 2) & eq: x2 = 0", c);
  CHECK(m.contains(Element{-3, 0}));
  CHECK_FALSE(m.contains(Element{2, 0}));
  CHECK_FALSE(m.contains(Element{1, 1}));
  PositiveSet u = parse_positive_set("points: (0,0),(1,1) | lin: x1 >= 2 & lin: x2 >= 2", c);
  CHECK(u.contains(Element{1, 1}));
  CHECK(u.contains(Element{5, 2}));
  CHECK_FALSE(u.contains(Element{1, 2}));
  CHECK(PositiveSet::everything().contains(Element{9, -9}));
  CHECK_FALSE(PositiveSet().contains(Element{0, 0}));
}

TEST_CASE("positive set text is order independent") {
  Carrier c = plane();
  auto fmt = [&](const Element& e) { return c.format(e); };
  PositiveSet a = parse_positive_set("lin: x1 >= 0 & eq: x2 = 0 | points: (1,1)", c);
  PositiveSet b = parse_positive_set("points: (1,1) | eq: x2 = 0 & lin: x1 >= 0", c);
  CHECK(format_positive_set(a, fmt) == format_positive_set(b, fmt));
}

TEST_CASE("grid carrier arithmetic") {
  Carrier t = Carrier::grid(1, {2}, true, true);
  Element a = t.parse_element("(1,1)");
  CHECK(t.add(a, a) == Element(Coords{2}, Residues{0}));
  CHECK(t.negate(a) == Element(Coords{-1}, Residues{1}));
  CHECK(t.format(t.multiple(3, a)) == "(3,1)");
  Carrier q = Carrier::grid(1, {}, false, true);
  CHECK(q.parse_element("-1/2") == Element{Rational(-1, 2)});
  CHECK(q.format(Element{Rational(3, 2)}) == "3/2");
  Carrier n = Carrier::grid(1, {}, true, false, parse_positive_set("lin: x1 >= 0", Carrier::grid(1, {}, true, true)));
  CHECK(n.contains(Element{3}));
  CHECK_FALSE(n.contains(Element{-1}));
  CHECK_THROWS_AS(n.negate(Element{1}), UnsupportedOperation);
}

TEST_CASE("finite carrier from a spec") {
  StructurePtr s = build_structure(parse_spec(kZ3));
  const Carrier& c = s->carrier();
  CHECK(c.kind() == CarrierKind::Finite);
  CHECK(c.size() == 3);
  Element e1 = c.parse_element("e1"), e2 = c.parse_element("e2");
  CHECK(c.format(c.add(e1, e2)) == "e0");
  CHECK(c.format(c.negate(e1)) == "e2");
  CHECK(s->is_group());
  CHECK(s->le(e1, e1));
  CHECK_FALSE(s->le(e1, e2));
}

TEST_CASE("window enumeration") {
  Carrier c = plane();
  CHECK(enumerate_window(c, cube(2, -1, 1)).size() == 9);
  Carrier q = Carrier::grid(1, {}, false, true);
  CHECK(enumerate_window(q, cube(1, 0, 1, 2)).size() == 3);
  Window w = cube(2, -1, 1, 1, 2);
  CHECK(enumerate_search_box(c, w).size() == 49);
  CHECK(w.inside(Element{1, -1}));
  CHECK_FALSE(w.inside(Element{2, 0}));
  CHECK(w.padded().on_rim(Element{3, 0}));
  CHECK_FALSE(w.padded().on_rim(Element{2, 2}));
  CHECK(format_window(w) == "[-1,1];[-1,1];q=1;pad=2");
}

TEST_CASE("window cap refuses large enumerations") {
  Carrier c = plane();
  setenv("MIXLAT_WINDOW_CAP", "50", 1);
  CHECK_THROWS_AS(enumerate_window(c, cube(2, -5, 5)), WindowRefused);
  CHECK(enumerate_window(c, cube(2, -2, 2)).size() == 25);
  unsetenv("MIXLAT_WINDOW_CAP");
  CHECK(window_cap() == 1000000);
}

TEST_CASE("parse errors carry positions") {
  auto pos = [](const char* text) -> std::pair<std::size_t, std::size_t> {
    try {
      build_structure(parse_spec(text));
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(pos("[carrier]\nkind = grid\n[bogus]\n") == std::pair<std::size_t, std::size_t>{3, 2});
  CHECK(pos("[carrier]\nkind grid\n").first == 2);
  CHECK(pos("[carrier]\nkind = torus\n") == std::pair<std::size_t, std::size_t>{2, 8});
  CHECK_THROWS_WITH_AS(build_structure(parse_spec("[structure]\nname = x\n")),
                       doctest::Contains("missing [carrier] section"), ParseError);
  CHECK(pos("[carrier]\nkind = grid\nrank = 1\nnegation = true\n"
            "[order.initial]\npositive = lin: y1 >= 0\n[order.specific]\npositive = lin: x1 >= 0\n")
            .first == 6);
}

TEST_CASE("validation rejects a non-antisymmetric order") {
  const char* text = R"([carrier]
kind = grid
rank = 1
integral = true
negation = true

[order.initial]
positive = lin: x1 >= 0

[order.specific]
positive = mod: x1 = 0 (mod 2)

[window]
bounds = [-3,3]
)";
  try {
    build_structure(parse_spec(text));
    FAIL("expected an axiom violation");
  } catch (const AxiomViolation& e) {
    CHECK(e.verdict().is_fails());
    CHECK(e.check().find("specific") != std::string::npos);
  }
}

TEST_CASE("serialize round-trips every gallery entry") {
  for (const std::string& name : gallery_list()) {
    CAPTURE(name);
    const GalleryEntry& e = build_gallery(name);
    std::string text = serialize(*e.structure);
    StructurePtr again = build_structure(parse_spec(text));
    CHECK(serialize(*again) == text);
    CHECK(again->default_window() == e.window);
    for (const Element& a : enumerate_window(*e.structure, cube(e.structure->carrier().rank(), -2, 2)))
      for (const Element& b : enumerate_window(*e.structure, cube(e.structure->carrier().rank(), -2, 2))) {
        if (!e.structure->carrier().contains(a) || !e.structure->carrier().contains(b)) continue;
        CHECK(again->le(a, b) == e.structure->le(a, b));
        CHECK(again->sle(a, b) == e.structure->sle(a, b));
      }
  }
}

TEST_CASE("finite spec round-trip") {
  StructurePtr s = build_structure(parse_spec(kZ3));
  std::string text = serialize(*s);
  CHECK(serialize(*build_structure(parse_spec(text))) == text);
}

TEST_CASE("axioms on small examples") {
  const GalleryEntry& mod3 = build_gallery("nonneg-integers-mod3-cone");
  const Carrier& c = mod3.structure->carrier();
  Verdict nat = check_axiom(*mod3.structure, AxiomId::NatordLeq, mod3.window);
  CHECK(nat.is_fails());
  CHECK(format_witness(c, nat.witness) == "(0,1)");
  CHECK(check_axiom(*mod3.structure, AxiomId::NatordSleq, mod3.window).is_holds());
  const GalleryEntry& m = build_gallery("halfline-gap-M");
  CHECK(check_axiom(*m.structure, AxiomId::NatordSleq, m.window).is_holds());
  for (const char* g : {"double-lex", "torsion-z2"}) {
    const GalleryEntry& e = build_gallery(g);
    CHECK(check_axiom(*e.structure, AxiomId::CancLeq, e.window).is_holds());
    CHECK(check_axiom(*e.structure, AxiomId::PoCompat, e.window).is_holds());
  }
}

TEST_CASE("cancellation of <= with a natural ⊑ gives cancellation of ⊑") {
  for (const std::string& name : gallery_list()) {
    CAPTURE(name);
    const GalleryEntry& e = build_gallery(name);
    Verdict cl = check_axiom(*e.structure, AxiomId::CancLeq, e.window);
    Verdict ns = check_axiom(*e.structure, AxiomId::NatordSleq, e.window);
    if (cl.is_holds() && ns.is_holds())
      CHECK(check_axiom(*e.structure, AxiomId::CancSleq, e.window).is_holds());
  }
}

TEST_CASE("order properties of every gallery structure") {
  for (const std::string& name : gallery_list()) {
    CAPTURE(name);
    const GalleryEntry& e = build_gallery(name);
    for (Which w : {Which::Initial, Which::Specific}) {
      CHECK(check_reflexive(*e.structure, w, e.window).is_holds());
      CHECK(check_antisymmetric(*e.structure, w, e.window).is_holds());
      CHECK(check_transitive(*e.structure, w, e.window).is_holds());
      CHECK(check_compatible(*e.structure, w, e.window).is_holds());
    }
  }
}

TEST_CASE("restriction and positive cones") {
  const GalleryEntry& g = build_gallery("halfline-gap-G");
  PositiveSet cone = positive_cone(*g.structure, Which::Specific);
  CHECK(cone.contains(Element{0}));
  CHECK(cone.contains(Element{Rational(5, 2)}));
  CHECK_FALSE(cone.contains(Element{1}));
  TwoOrderStructure m = restrict_structure(*g.structure, cone, "sub");
  CHECK_FALSE(m.is_group());
  CHECK(m.carrier().contains(Element{2}));
  CHECK_FALSE(m.carrier().contains(Element{1}));
  CHECK(m.le(Element{2}, Element{3}));
  CHECK_FALSE(m.sle(Element{2}, Element{3}));
}

TEST_CASE("verdict rendering") {
  Carrier c = plane();
  Verdict v = Verdict::fails({Element{1, 2}}, "", cube(2, -1, 1));
  CHECK(rendered(v, c) == "X: FAILS witness=(1,2) window=[-1,1];[-1,1];q=1");
  CHECK(rendered(Verdict::holds(), c) == "X: HOLDS");
}
