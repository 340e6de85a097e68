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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mixlat/classify.hpp"
#include "mixlat/cli.hpp"
#include "mixlat/gallery.hpp"
#include "mixlat/laws.hpp"
#include "mixlat/spec_io.hpp"
#include "oracle/ref_models.hpp"

using namespace mixlat;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> misses;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) misses.push_back(what);
  }
  void same(const std::string& got, const std::string& want, const std::string& what) {
    expect(got == want, what + ": got " + got + ", want " + want);
  }
};

std::string env_text(const EnvelopeResult& r, const Carrier& c) { return render_envelope(r, c); }

std::string wit(const Verdict& v, const Carrier& c) {
  return std::string(outcome_text(v.outcome)) + (v.witness.empty() ? "" : " " + format_witness(c, v.witness));
}

EnvelopeEngine engine(const std::string& name) {
  const GalleryEntry& e = build_gallery(name);
  return EnvelopeEngine(e.structure, e.window);
}

Element el(const std::string& name, const char* text) {
  return build_gallery(name).structure->carrier().parse_element(text);
}

// ---- 1 ----

void cited_values(Tally& t) {
  {
    EnvelopeEngine g = engine("halfline-gap-G");
    t.same(env_text(g.lower(Element{3}, Element{2}), g.structure().carrier()), "1 window-verified",
           "G: 3∧2");
  }
  {
    EnvelopeEngine m = engine("halfline-gap-M");
    const Carrier& c = m.structure().carrier();
    t.same(env_text(m.lower(Element{3}, Element{2}), c), "0 window-verified", "M: 3∧2");
    t.same(env_text(m.lower(Element{5}, Element{4}), c), "3 window-verified", "M: 5∧4");
    t.same(wit(check_law(m, LawId::TransLow), c), "FAILS (3,2,2)", "M: TRANS-LOW");
  }
  {
    EnvelopeEngine z = engine("nonneg-integers-mod3-cone");
    const EnvelopeResult& r = z.lower(Element{1}, Element{2});
    t.expect(!r.value && r.cert == Certificate::NonexistentEmpty, "mod3: 1∧2 should have an empty defining set");
  }
  {
    const std::string n = "double-lex";
    EnvelopeEngine d = engine(n);
    const TwoOrderStructure& s = d.structure();
    Element x = el(n, "(0,1)"), y = el(n, "(1,1)");
    const EnvelopeResult& r = d.upper(y, x);
    t.same(env_text(r, s.carrier()), "(0,2) window-verified", "double-lex: y∨x");
    if (r.found()) {
      Element diff = s.sub(*r.value, y);
      t.same(s.format(diff), "(-1,1)", "double-lex: y∨x − y");
      t.expect(!(s.le(s.zero(), diff) && s.sle(s.zero(), diff)), "double-lex: y∨x − y should lie outside F");
    }
  }
  {
    const std::string n = "lex-diagcone";
    EnvelopeEngine d = engine(n);
    const TwoOrderStructure& s = d.structure();
    Element u = el(n, "(-1,1)"), v = el(n, "(1,1)");
    t.same(env_text(d.upper(u, v), s.carrier()), "(1,3) window-verified", "lex-diagcone: u∨v");
    t.same(s.format(s.add(u, v)), "(0,2)", "lex-diagcone: u+v");
    ClassificationReport r = classify_structure(d);
    t.same(wit(r.at(ClassId::PreNormal), s.carrier()), "FAILS (-1,1)", "lex-diagcone: PRE-NORMAL");
  }
  {
    EnvelopeEngine d = engine("diag-step");
    t.same(wit(check_law(d, LawId::DivLeq, 2), d.structure().carrier()), "FAILS (1,2)", "diag-step: DIV-LEQ");
  }
  {
    const GalleryEntry& e = build_gallery("torsion-z2");
    auto fo = finite_order_elements(*e.structure, e.window, 12);
    std::string got;
    for (const auto& [x, k] : fo) got += e.structure->format(x) + " order=" + std::to_string(k) + ";";
    t.same(got, "(0,1) order=2;", "torsion-z2: finite order");
    EnvelopeEngine eng(e.structure, e.window);
    t.same(wit(check_archimedean(eng, Which::Initial), e.structure->carrier()), "FAILS ((0,1),(1,0))",
           "torsion-z2: (≤)-Archimedean");
  }
}

// ---- 2 ----

const std::map<std::string, std::string>& class_rows() {
  // H holds, F fails, U unknown. Semigroup entries list A-STRUCTURE,
  // POSITIVE-A, WEAK-MLS, MLS; group entries MLG through REGULAR.
  static const std::map<std::string, std::string> m = {
      {"nonneg-integers-mod3-cone", "HFFF"}, {"halfline-gap-M", "HHHF"}, {"halfline-gap-G", "HHHHFF"},
      {"double-lex", "HFFFFF"},              {"r3-two-cones", "HHFFFF"},  {"lex-diagcone", "HFFFFF"},
      {"diag-step", "HHHHHF"},               {"torsion-z2", "HHHHHF"},
  };
  return m;
}

char letter(const Verdict& v) { return v.is_holds() ? 'H' : v.is_fails() ? 'F' : 'U'; }

void class_matrix(Tally& t) {
  const std::vector<ClassId> semi = {ClassId::AStructure, ClassId::PositiveA, ClassId::WeakMls, ClassId::Mls};
  const std::vector<ClassId> group = {ClassId::Mlg,        ClassId::PreNormal,    ClassId::Normal,
                                      ClassId::PreRegular, ClassId::QuasiRegular, ClassId::Regular};
  for (const std::string& name : gallery_list()) {
    const GalleryEntry& e = build_gallery(name);
    ClassificationReport r = classify_structure(e.structure, e.window);
    std::string row;
    for (ClassId id : e.structure->is_group() ? group : semi) row += letter(r.at(id));
    t.same(row, class_rows().at(name), name + " classes");
    for (auto [weak, strong] : class_implications())
      t.expect(!(r.at(strong).is_holds() && r.at(weak).is_fails()),
               name + ": " + class_name(strong) + " holds but " + class_name(weak) + " fails");
  }
}

// ---- 3 ----

void oracle_equivalence(Tally& t) {
  std::vector<std::future<Tally>> jobs;
  for (const ref::Model& m : ref::models())
    jobs.push_back(std::async(std::launch::async, [m] {
      Tally local;
      const GalleryEntry& e = build_gallery(m.name);
      std::vector<ref::Pt> box = m.box();
      std::size_t bad = 0;
      for (const auto& [x, y] : m.pairs(1000, 20260101)) {
        Element ex = m.to_element(x), ey = m.to_element(y);
        for (bool upper : {true, false}) {
          ref::Env want = upper ? m.upper(box, x, y) : m.lower(box, x, y);
          auto got = upper ? e.structure->upper_hint()(ex, ey) : e.structure->lower_hint()(ex, ey);
          bool ok = want.status == ref::Status::Found ? got && *got == m.to_element(want.value) : !got;
          if (!ok) ++bad;
        }
      }
      local.expect(bad == 0, m.name + ": " + std::to_string(bad) + " hint mismatches");
      return local;
    }));
  for (auto& j : jobs) {
    Tally r = j.get();
    t.checks += r.checks;
    t.misses.insert(t.misses.end(), r.misses.begin(), r.misses.end());
  }
}

// ---- 4 ----

void cross_links(Tally& t) {
  std::vector<std::future<Tally>> jobs;
  for (const ref::Model& m : ref::models()) {
    const GalleryEntry& e = build_gallery(m.name);
    if (!e.structure->is_group()) continue;
    jobs.push_back(std::async(std::launch::async, [m, &e] {
      Tally local;
      CrossChecker cc(e.structure, e.window);
      std::size_t holds = 0, fails = 0, unknown = 0;
      for (const auto& [x, y] : m.pairs(200, 4242)) {
        Verdict v = cc.check(m.to_element(x), m.to_element(y));
        (v.is_holds() ? holds : v.is_fails() ? fails : unknown)++;
      }
      local.expect(fails == 0 && holds >= 200, m.name + ": " + std::to_string(holds) + " holds, " +
                                                   std::to_string(fails) + " fails, " +
                                                   std::to_string(unknown) + " unknown");
      return local;
    }));
  }
  for (auto& j : jobs) {
    Tally r = j.get();
    t.checks += r.checks;
    t.misses.insert(t.misses.end(), r.misses.begin(), r.misses.end());
  }
}

// ---- 5 ----

void law_suite(Tally& t) {
  std::vector<std::future<Tally>> jobs;
  for (const std::string& name : gallery_list()) {
    const GalleryEntry& e = build_gallery(name);
    if (!e.structure->is_group()) continue;
    jobs.push_back(std::async(std::launch::async, [&e] {
      Tally local;
      EnvelopeEngine eng(e.structure, e.window);
      ClassificationReport r = classify_structure(eng);
      if (!r.at(ClassId::Mlg).is_holds()) return local;
      for (LawId id : {LawId::P0, LawId::P4, LawId::P5B, LawId::P1, LawId::P2, LawId::P3})
        local.expect(check_law(eng, id).is_holds(), e.name + ": " + law_name(id) + " should hold");
      std::string qr;
      for (LawId id : {LawId::QrB, LawId::QrC, LawId::QrD, LawId::QrE, LawId::QrF})
        qr += outcome_text(check_law(eng, id).outcome)[0];
      local.expect(qr.find_first_not_of(qr[0]) == std::string::npos, e.name + ": QR verdicts differ: " + qr);
      bool pre_normal = r.at(ClassId::PreNormal).is_holds();
      Verdict r0 = check_law(eng, LawId::R0);
      local.expect(pre_normal ? r0.is_holds() : r0.is_fails(),
                   e.name + ": R0 " + outcome_text(r0.outcome) + " with PRE-NORMAL " +
                       outcome_text(r.at(ClassId::PreNormal).outcome));
      return local;
    }));
  }
  for (auto& j : jobs) {
    Tally r = j.get();
    t.checks += r.checks;
    t.misses.insert(t.misses.end(), r.misses.begin(), r.misses.end());
  }
  {
    EnvelopeEngine ld = engine("lex-diagcone");
    t.expect(check_law(ld, LawId::R0).is_fails(), "lex-diagcone: R0 should fail");
    const TwoOrderStructure& s = ld.structure();
    StructurePtr sp =
        finalize_structure(restrict_structure(s, positive_cone(s, Which::Specific), s.name() + "/sp"));
    EnvelopeEngine eng(sp, ld.window());
    // u = (−1,1), v = (1,1): u∨v = (1,3) is not below u+v = (0,2)
    Outcome o = evaluate_law_at(eng, LawId::PosA, {el("lex-diagcone", "(1,1)"), el("lex-diagcone", "(-1,1)")});
    t.same(outcome_text(o), "FAILS", "lex-diagcone G_sp: POS-A at u=(-1,1), v=(1,1)");
  }
  {
    EnvelopeEngine m = engine("halfline-gap-M");
    t.expect(check_law(m, LawId::WmlsIneq).is_holds(), "halfline-gap-M: WMLS-INEQ should hold");
  }
}

// ---- 6 ----

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
)";

void constructions(Tally& t) {
  const GalleryEntry& m = build_gallery("halfline-gap-M");
  StructurePtr g = group_of_differences(m.structure, m.window);
  EnvelopeEngine eng(g, g->default_window());
  t.same(env_text(eng.lower(Element{3}, Element{2}), g->carrier()), "1 window-verified",
         "group of differences: 3∧2");

  const GalleryEntry& hg = build_gallery("halfline-gap-G");
  StructurePtr line = build_structure(parse_spec(kLine));
  Extension ext = extend_specific_order(m.structure, line, hg.window);
  std::vector<Element> pts = enumerate_window(*hg.structure, hg.window);
  std::size_t bad = 0;
  for (const Element& a : pts)
    for (const Element& b : pts)
      if (ext.structure->sle(a, b) != hg.structure->sle(a, b)) ++bad;
  t.expect(bad == 0, "extended order differs from halfline-gap-G on " + std::to_string(bad) + " pairs");
}

// ---- 7 ----

std::string full_report() {
  std::ostringstream out, err;
  execute({"gallery", "--all"}, out, err);
  for (const std::string& name : gallery_list())
    execute({"classify", "--gallery", name, "--format", "kv"}, out, err);
  execute({"search", "--max-size", "4", "--target", "A-STRUCTURE,POSITIVE-A"}, out, err);
  return out.str() + err.str();
}

void determinism(Tally& t) {
  std::string a = full_report();
  std::string b = full_report();
  t.expect(!a.empty() && a == b, "reports differ between runs");
}

struct Criterion {
  int id;
  const char* name;
  double target_seconds;
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cited-values", 10, cited_values},     {2, "class-matrix", 20, class_matrix},
      {3, "oracle-equivalence", 30, oracle_equivalence}, {4, "cross-links", 0, cross_links},
      {5, "law-suite", 0, law_suite},           {6, "constructions", 0, constructions},
      {7, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool slow = c.target_seconds > 0 && secs > c.target_seconds;
    bool ok = error.empty() && t.misses.empty() && !slow;
    if (!ok) ++failed;
    std::printf("CRITERION %d %s: %s (%zu checks, %.2f s", c.id, c.name, ok ? "PASS" : "FAIL", t.checks, secs);
    if (c.target_seconds > 0) std::printf(", target < %.0f s", c.target_seconds);
    std::printf(")\n");
    for (const std::string& m : t.misses) std::printf("  miss: %s\n", m.c_str());
    if (!error.empty()) std::printf("  error: %s\n", error.c_str());
    if (slow) std::printf("  over the runtime target\n");
  }
  return failed == 0 ? 0 : 1;
}
