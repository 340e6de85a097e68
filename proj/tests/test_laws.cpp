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

#include <string>
#include <vector>

#include "mixlat/gallery.hpp"
#include "mixlat/laws.hpp"
#include "mixlat/spec_io.hpp"
#include "oracle/ref_models.hpp"

using namespace mixlat;

namespace {

const char* kLine = R"([structure]
name = rational-line

[carrier]
kind = grid
rank = 1
integral = false
negation = true

[order.initial]
positive = lin: x1 >= 0

[order.specific]
positive = lin: x1 >= 0

[window]
bounds = [-8,8]
q = 2
pad = 8
)";

const char* kIntegers = R"([structure]
name = integers

[carrier]
kind = grid
rank = 1
integral = true
negation = true

[order.initial]
positive = lin: x1 >= 0

[order.specific]
positive = lin: x1 >= 0

[window]
bounds = [-5,5]
q = 1
pad = 10
)";

struct Fixture {
  const GalleryEntry& e;
  EnvelopeEngine eng;
  explicit Fixture(const char* name) : e(build_gallery(name)), eng(e.structure, e.window) {}
  Element el(const char* t) const { return e.structure->carrier().parse_element(t); }
  std::string wit(const Verdict& v) const { return format_witness(e.structure->carrier(), v.witness); }
};

StructurePtr specific_cone(const StructurePtr& s) {
  return finalize_structure(restrict_structure(*s, positive_cone(*s, Which::Specific), s->name() + "/sp"));
}

}  // namespace

TEST_CASE("law catalog") {
  for (LawId id : all_laws()) {
    CHECK(parse_law(law_name(id)) == id);
    CHECK(law_arity(id) >= 1);
    CHECK_FALSE(law_formula(id).empty());
  }
  CHECK(all_laws().size() == 24);
  CHECK(law_arity(LawId::TransLow) == 3);
  CHECK(law_group_only(LawId::P1));
  CHECK_FALSE(law_group_only(LawId::P0));
  CHECK(law_scaled(LawId::DivLeq));
  CHECK_FALSE(parse_law("P9"));
}

TEST_CASE("group identities on small groups") {
  for (const char* name : {"halfline-gap-G", "torsion-z2"}) {
    CAPTURE(name);
    Fixture f(name);
    for (LawId id : {LawId::P0, LawId::P4, LawId::P5B, LawId::P1, LawId::P2, LawId::P3, LawId::R0}) {
      CAPTURE(law_name(id));
      Verdict v = check_law(f.eng, id);
      CHECK(v.is_holds());
      CHECK(v.checked > 0);
    }
  }
}

TEST_CASE("R0 separates pre-normal groups") {
  Fixture r3("r3-two-cones");
  CHECK(check_law(r3.eng, LawId::R0).is_holds());
  Fixture ld("lex-diagcone");
  CHECK(check_law(ld.eng, LawId::R0).is_fails());
}

TEST_CASE("semigroup laws on halfline-gap-M") {
  Fixture m("halfline-gap-M");
  Verdict t = check_law(m.eng, LawId::TransLow);
  REQUIRE(t.is_fails());
  CHECK(m.wit(t) == "(3,2,2)");
  CHECK(check_law(m.eng, LawId::WmlsIneq).is_holds());
  CHECK(check_law(m.eng, LawId::TransUp).is_holds());
  CHECK(check_law(m.eng, LawId::PosA).is_holds());
  Verdict p1 = check_law(m.eng, LawId::P1);
  CHECK(p1.unsupported);
  CHECK(evaluate_law_at(m.eng, LawId::TransLow, {m.el("3"), m.el("2"), m.el("2")}) == Outcome::Fails);
  CHECK(evaluate_law_at(m.eng, LawId::TransLow, {m.el("5"), m.el("4"), m.el("0")}) == Outcome::Holds);
}

TEST_CASE("positivity law on the specific cone of lex-diagcone") {
  Fixture ld("lex-diagcone");
  StructurePtr sp = specific_cone(ld.e.structure);
  EnvelopeEngine eng(sp, ld.e.window);
  CHECK(check_law(eng, LawId::PosA).is_fails());
  CHECK(evaluate_law_at(eng, LawId::PosA, {ld.el("(1,1)"), ld.el("(-1,1)")}) == Outcome::Fails);
}

TEST_CASE("divisibility on diag-step and torsion-z2") {
  Fixture d("diag-step");
  Verdict v = check_law(d.eng, LawId::DivLeq, 2);
  REQUIRE(v.is_fails());
  CHECK(d.wit(v) == "(1,2)");
  CHECK(v.multipliers == std::vector<std::int64_t>{2});
  CHECK(check_law(d.eng, LawId::DivLeq, 1).is_holds());
  Fixture t("torsion-z2");
  CHECK(evaluate_law_at(t.eng, LawId::DivSleq, {t.el("(1,0)")}, 2) == Outcome::Fails);
  CHECK(evaluate_law_at(t.eng, LawId::DivSleq, {t.el("(2,0)")}, 2) == Outcome::Holds);
}

TEST_CASE("scaling laws on the integers") {
  StructurePtr z = build_structure(parse_spec(kIntegers));
  EnvelopeEngine eng(z, z->default_window());
  for (LawId id : {LawId::ScaleLow, LawId::ScaleUp, LawId::ScaleZero, LawId::DivLeq, LawId::DivSleq}) {
    CAPTURE(law_name(id));
    CHECK(check_law(eng, id, 3).is_holds());
  }
}

TEST_CASE("scaling fails on halfline-gap-G") {
  Fixture g("halfline-gap-G");
  Verdict v = check_law(g.eng, LawId::ScaleLow, 2);
  REQUIRE(v.is_fails());
  CHECK(g.wit(v) == "(0,-1/2)");
  // 6∧4 = 4 but 2(3∧2) = 2
  CHECK(evaluate_law_at(g.eng, LawId::ScaleLow, {g.el("3"), g.el("2")}, 2) == Outcome::Fails);
}

TEST_CASE("Archimedean checks") {
  Fixture t("torsion-z2");
  Verdict le = check_archimedean(t.eng, Which::Initial);
  REQUIRE(le.is_fails());
  CHECK(t.wit(le) == "((0,1),(1,0))");
  CHECK(check_archimedean(t.eng, Which::Specific).is_holds());
  StructurePtr z = build_structure(parse_spec(kIntegers));
  EnvelopeEngine ze(z, z->default_window());
  CHECK(check_archimedean(ze, Which::Initial).is_holds());
}

TEST_CASE("finite-order elements") {
  const GalleryEntry& t = build_gallery("torsion-z2");
  auto fo = finite_order_elements(*t.structure, t.window, 12);
  REQUIRE(fo.size() == 1);
  CHECK(t.structure->format(fo[0].first) == "(0,1)");
  CHECK(fo[0].second == 2);
  const GalleryEntry& d = build_gallery("diag-step");
  CHECK(finite_order_elements(*d.structure, d.window, 12).empty());
}

TEST_CASE("asymmetric absolute values match the reference model") {
  Fixture g("halfline-gap-G");
  ref::Model m = ref::model("halfline-gap-G");
  std::vector<ref::Pt> box = m.box();
  for (std::int64_t k : {-6, -3, -1, 1, 2, 5}) {
    CAPTURE(k);
    ref::Pt x{{k}}, z{{0}}, nx{{-k}};
    auto v = [&](const ref::Env& e) { return e.value.c[0]; };
    std::int64_t ul = v(m.upper(box, x, z)) + v(m.upper(box, z, nx));
    std::int64_t lu = v(m.upper(box, z, x)) + v(m.upper(box, nx, z));
    auto [gul, glu] = abs_asym(g.eng, m.to_element(x));
    CHECK(gul == m.to_element(ref::Pt{{ul}}));
    CHECK(glu == m.to_element(ref::Pt{{lu}}));
  }
}

TEST_CASE("homomorphisms") {
  const GalleryEntry& d = build_gallery("double-lex");
  HomomorphismSpec id{{{1, 0}, {0, 1}}, d.structure, d.structure};
  HomomorphismReport r = check_homomorphism(id, cube(2, -2, 2));
  CHECK(r.additive.is_holds());
  CHECK(r.hom.is_holds());
  CHECK(r.agree);
  HomomorphismSpec neg{{{-1, 0}, {0, -1}}, d.structure, d.structure};
  CHECK(neg.apply(Element{1, 2}) == (Element{-1, -2}));
  HomomorphismReport rn = check_homomorphism(neg, cube(2, -2, 2));
  CHECK(rn.additive.is_holds());
  CHECK(rn.hom.is_fails());
  CHECK(rn.agree);
}

TEST_CASE("group of differences of halfline-gap-M") {
  const GalleryEntry& m = build_gallery("halfline-gap-M");
  StructurePtr g = group_of_differences(m.structure, m.window);
  REQUIRE(g->is_group());
  EnvelopeEngine eng(g, g->default_window());
  CHECK(*eng.lower(Element{3}, Element{2}).value == Element{1});
  CHECK(check_law(eng, LawId::P1).is_holds());
  StructurePtr absorbing = build_structure(parse_spec(R"([carrier]
kind = finite
elements = a,b
add = a,b; b,b

[order.initial]
pairs = (a,b)

[order.specific]
pairs = (a,a)
)"));
  CHECK_THROWS(group_of_differences(absorbing, absorbing->default_window()));
}

TEST_CASE("extending a specific order from {0} ∪ [2,∞)") {
  const GalleryEntry& m = build_gallery("halfline-gap-M");
  const GalleryEntry& g = build_gallery("halfline-gap-G");
  StructurePtr line = build_structure(parse_spec(kLine));
  Extension ext = extend_specific_order(m.structure, line, g.window);
  std::vector<Element> pts = enumerate_window(*g.structure, g.window);
  for (const Element& a : pts)
    for (const Element& b : pts) CHECK(ext.structure->sle(a, b) == g.structure->sle(a, b));
  CHECK(ext.domination.is_holds());
}
