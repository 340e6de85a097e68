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

#include <map>
#include <string>
#include <vector>

#include "mixlat/classify.hpp"
#include "mixlat/gallery.hpp"
#include "mixlat/spec_io.hpp"

using namespace mixlat;

namespace {

// H holds, F fails, U unknown; semigroup classes first, then group classes.
const std::map<std::string, std::string>& matrix() {
  static const std::map<std::string, std::string> m = {
      {"nonneg-integers-mod3-cone", "HFFFFF UUUUUU"},
      {"halfline-gap-M", "HHHFFF UUUUUU"},
      {"halfline-gap-G", "FFFFFF HHHHFF"},
      {"double-lex", "FFFFFF HFFFFF"},
      {"r3-two-cones", "FFFFFF HHFFFF"},
      {"lex-diagcone", "FFFFFF HFFFFF"},
      {"diag-step", "FFFFFF HHHHHF"},
      {"torsion-z2", "FFFFFF HHHHHF"},
  };
  return m;
}

char letter(const Verdict& v) { return v.is_holds() ? 'H' : v.is_fails() ? 'F' : 'U'; }

const ClassificationReport& report(const std::string& name) {
  static std::map<std::string, ClassificationReport> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const GalleryEntry& e = build_gallery(name);
  return cache.emplace(name, classify_structure(e.structure, e.window)).first->second;
}

std::string row(const ClassificationReport& r) {
  std::string s;
  for (ClassId id : all_classes()) {
    if (id == ClassId::Mlg) s += ' ';
    s += letter(r.at(id));
  }
  return s;
}

}  // namespace

TEST_CASE("class names round-trip") {
  for (ClassId id : all_classes()) CHECK(parse_class(class_name(id)) == id);
  CHECK_FALSE(parse_class("LATTICE"));
  CHECK(class_name(ClassId::QuasiRegular) == "QUASI-REGULAR");
}

TEST_CASE("class matrix of the gallery") {
  for (const auto& [name, want] : matrix()) {
    CAPTURE(name);
    CHECK(row(report(name)) == want);
  }
}

TEST_CASE("implied classes never fail when the stronger one holds") {
  for (const std::string& name : gallery_list()) {
    CAPTURE(name);
    const ClassificationReport& r = report(name);
    for (auto [weak, strong] : class_implications())
      if (r.at(strong).is_holds()) CHECK_FALSE(r.at(weak).is_fails());
    if (r.at(ClassId::WeakMls).is_holds()) CHECK(r.at(ClassId::PositiveA).is_holds());
  }
}

TEST_CASE("semigroups get no group classes") {
  const ClassificationReport& r = report("halfline-gap-M");
  CHECK(r.at(ClassId::Mlg).unsupported);
  CHECK(r.at(ClassId::Regular).unsupported);
}

TEST_CASE("report text") {
  const GalleryEntry& e = build_gallery("torsion-z2");
  std::string text = format_report(report("torsion-z2"), e.structure->carrier());
  CHECK(text.find("CLASS QUASI-REGULAR: HOLDS") != std::string::npos);
  CHECK(text.find("CLASS REGULAR: FAILS witness=(0,1)") != std::string::npos);
  const GalleryEntry& m = build_gallery("nonneg-integers-mod3-cone");
  std::string mt = format_report(report(m.name), m.structure->carrier());
  CHECK(mt.find("CLASS POSITIVE-A: FAILS witness=1") != std::string::npos);
}

TEST_CASE("substructures of halfline-gap-G") {
  const GalleryEntry& g = build_gallery("halfline-gap-G");
  PositiveSet s = parse_positive_set("points: 0 | lin: x1 >= 2", g.structure->carrier());
  CHECK(classify_subset(g.structure, s, SubsetKind::ASubstructure, g.window).is_holds());
  Verdict ml = classify_subset(g.structure, s, SubsetKind::MlSubsemigroup, g.window);
  CHECK(ml.is_fails());
  PositiveSet odd = parse_positive_set("lin: x1 >= 1", g.structure->carrier());
  CHECK_THROWS_AS(classify_subset(g.structure, odd, SubsetKind::ASubstructure, g.window), UsageError);

  // A standalone copy of an A-substructure is an A-structure.
  TwoOrderStructure sub = restrict_structure(*g.structure, s, "sub");
  StructurePtr sp = finalize_structure(std::move(sub));
  Window w = cube(1, 0, 8, 1, 8);
  CHECK(classify_structure(sp, w).at(ClassId::AStructure).is_holds());
}

TEST_CASE("specific cones are closed substructures when quasi-regular") {
  for (const char* name : {"diag-step", "torsion-z2"}) {
    CAPTURE(name);
    const GalleryEntry& e = build_gallery(name);
    PositiveSet sp = positive_cone(*e.structure, Which::Specific);
    CHECK(classify_subset(e.structure, sp, SubsetKind::MlSubsemigroup, e.window).is_holds());
  }
}

TEST_CASE("nontrivial mixed lattice groups have common positive elements") {
  for (const std::string& name : gallery_list()) {
    const GalleryEntry& e = build_gallery(name);
    if (!e.structure->is_group()) continue;
    CAPTURE(name);
    bool found = false;
    for (const Element& x : enumerate_window(*e.structure, e.window))
      if (x != e.structure->zero() && e.structure->le(e.structure->zero(), x) &&
          e.structure->sle(e.structure->zero(), x))
        found = true;
    CHECK(found);
  }
}

TEST_CASE("regular elements") {
  const GalleryEntry& g = build_gallery("halfline-gap-G");
  RegularElements rg = regular_elements(g.structure, g.window);
  auto has = [](const RegularElements& r, const Element& x) {
    for (const Element& e : r.elements)
      if (e == x) return true;
    return false;
  };
  CHECK(has(rg, Element{1}));
  CHECK(has(rg, Element{0}));
  const GalleryEntry& t = build_gallery("torsion-z2");
  RegularElements rt = regular_elements(t.structure, t.window);
  CHECK(has(rt, t.structure->zero()));
  CHECK_FALSE(has(rt, t.structure->carrier().parse_element("(0,1)")));
  CHECK(has(rt, t.structure->carrier().parse_element("(2,0)")));
}
