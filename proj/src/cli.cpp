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

#include "mixlat/cli.hpp"

#include <filesystem>
#include <fstream>
#include <future>

#include <CLI11.hpp>

#include "mixlat/axioms.hpp"
#include "mixlat/gallery.hpp"
#include "mixlat/laws.hpp"
#include "mixlat/search.hpp"
#include "mixlat/spec_io.hpp"

namespace mixlat {

namespace {

constexpr int kHolds = 0, kFails = 1, kUnknown = 2, kInputError = 3;

struct Common {
  std::string spec;
  std::string gallery;
  std::string window;
  std::int64_t q = 0;
  std::int64_t pad = -1;
  std::string format = "text";
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--spec", c.spec, "structure spec file");
  app->add_option("--gallery", c.gallery, "gallery entry name");
  app->add_option("--window", c.window, "bounds, e.g. [-4,4];[-4,4]");
  app->add_option("--q", c.q, "denominator cap");
  app->add_option("--pad", c.pad, "search padding");
  app->add_option("--format", c.format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
}

std::vector<std::pair<Rational, Rational>> parse_bounds(const std::string& text) {
  std::vector<std::pair<Rational, Rational>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t open = text.find('[', i);
    if (open == std::string::npos) break;
    std::size_t close = text.find(']', open);
    if (close == std::string::npos) throw UsageError("unbalanced '[' in --window");
    std::string body = text.substr(open + 1, close - open - 1);
    std::size_t comma = body.find(',');
    if (comma == std::string::npos) throw UsageError("window bound needs 'lo,hi'");
    auto lo = parse_rational(body.substr(0, comma));
    auto hi = parse_rational(body.substr(comma + 1));
    if (!lo || !hi) throw UsageError("bad number in --window");
    if (*hi < *lo) throw UsageError("window bound has lo > hi");
    out.emplace_back(*lo, *hi);
    i = close + 1;
  }
  if (out.empty()) throw UsageError("--window needs at least one [lo,hi] bound");
  return out;
}

StructurePtr load(const Common& c) {
  if (c.spec.empty() == c.gallery.empty()) throw UsageError("give exactly one of --spec FILE or --gallery NAME");
  if (!c.spec.empty()) return load_spec_file(c.spec);
  return build_gallery(c.gallery).structure;
}

Window window_for(const TwoOrderStructure& s, const Common& c) {
  Window w = s.default_window();
  if (!c.window.empty()) {
    w.bounds = parse_bounds(c.window);
    if (s.carrier().kind() == CarrierKind::Grid && w.bounds.size() != s.carrier().rank())
      throw UsageError("--window has " + std::to_string(w.bounds.size()) + " bounds, carrier rank is " +
                       std::to_string(s.carrier().rank()));
  }
  if (c.q) {
    if (c.q < 1) throw UsageError("--q must be positive");
    w.q = c.q;
  }
  if (c.pad >= 0) w.pad = c.pad;
  return w;
}

void note_line(std::ostream& out, const Common& c, const Verdict& v) {
  if (c.format == "text" && !v.note.empty()) out << "  note: " << v.note << "\n";
}

int fold(const std::vector<Verdict>& vs) {
  bool any_unknown = false, any_decided = false;
  for (const auto& v : vs) {
    if (v.unsupported) continue;
    if (v.is_fails()) return kFails;
    if (v.is_unknown()) any_unknown = true;
    else any_decided = true;
  }
  if (any_unknown || !any_decided) return kUnknown;
  return kHolds;
}

int run_classify(const Common& c, bool strict, std::ostream& out) {
  StructurePtr s = load(c);
  Window w = window_for(*s, c);
  EnvelopeEngine eng(s, w);
  ClassificationReport r = classify_structure(eng);
  const Carrier& car = s->carrier();
  out << "STRUCTURE: " << r.structure << "\n";
  out << "WINDOW: " << (car.kind() == CarrierKind::Grid ? format_window(w) : "full") << "\n";
  for (auto& [id, v] : r.verdicts) {
    Verdict shown = v;
    shown.scope.reset();
    out << format_verdict("CLASS " + class_name(id), shown, car) << "\n";
    note_line(out, c, v);
  }
  if (s->is_group()) {
    auto fo = finite_order_elements(*s, w, 12);
    if (fo.empty()) out << "FINITE-ORDER: none\n";
    for (const auto& [x, k] : fo) out << "FINITE-ORDER: " << car.format(x) << " order=" << k << "\n";
  }
  for (const auto& n : r.notes) out << "NOTE: " << n << "\n";
  Verdict canc_le = check_axiom(*s, AxiomId::CancLeq, w);
  Verdict nat_sle = check_axiom(*s, AxiomId::NatordSleq, w);
  Verdict canc_sle = check_axiom(*s, AxiomId::CancSleq, w);
  if (canc_le.is_holds() && nat_sle.is_holds() && !canc_sle.is_holds()) {
    out << "WARNING: CANC-LEQ and NATORD-SLEQ hold but CANC-SLEQ is " << outcome_text(canc_sle.outcome) << "\n";
    if (strict) return kFails;
  }
  return kHolds;
}

int run_envelope(const Common& c, const std::string& kind_text, const std::string& xs, const std::string& ys,
                 const std::string& cand, std::ostream& out) {
  StructurePtr s = load(c);
  Window w = window_for(*s, c);
  auto kind = parse_extremum(kind_text);
  if (!kind) throw UsageError("unknown --kind '" + kind_text + "'");
  const Carrier& car = s->carrier();
  Element x = car.parse_element(xs), y = car.parse_element(ys);
  if (!car.contains(x) || !car.contains(y)) throw UsageError("arguments must be elements of the carrier");
  EnvelopeEngine eng(s, w);
  out << "STRUCTURE: " << s->name() << "\n";
  out << "KIND: " << extremum_name(*kind) << "\n";
  out << "X: " << car.format(x) << "\nY: " << car.format(y) << "\n";
  if (!cand.empty()) {
    Element z = car.parse_element(cand);
    Verdict v = eng.verify(*kind, x, y, z);
    out << format_verdict("CANDIDATE " + car.format(z), v, car) << "\n";
    note_line(out, c, v);
    return fold({v});
  }
  EnvelopeResult r = eng.extremum(*kind, x, y);
  out << "VALUE " << (r.value ? car.format(*r.value) : "none") << " CERT " << certificate_text(r.cert) << "\n";
  if (r.link_holds) out << "LINK: " << (*r.link_holds ? "HOLDS" : "FAILS") << "\n";
  if (c.format == "text") {
    if (!r.note.empty()) out << "  note: " << r.note << "\n";
    if (!r.found() && !r.sample.empty()) {
      out << "  sample:";
      for (const auto& e : r.sample) out << " " << car.format(e);
      out << "\n";
    }
  }
  if (r.link_holds && !*r.link_holds) return kFails;
  if (r.found()) return kHolds;
  return r.absent() ? kFails : kUnknown;
}

int run_laws(const Common& c, const std::vector<std::string>& ids, int nmax, std::ostream& out) {
  StructurePtr s = load(c);
  Window w = window_for(*s, c);
  std::vector<LawId> laws;
  for (const auto& t : ids) {
    auto id = parse_law(t);
    if (!id) throw UsageError("unknown law '" + t + "'");
    laws.push_back(*id);
  }
  if (laws.empty()) laws = all_laws();
  if (nmax < 1) throw UsageError("--nmax must be positive");
  EnvelopeEngine eng(s, w);
  out << "STRUCTURE: " << s->name() << "\n";
  std::vector<Verdict> vs;
  for (LawId id : laws) {
    Verdict v = check_law(eng, id, nmax);
    out << format_verdict("LAW " + law_name(id), v, s->carrier()) << "\n";
    note_line(out, c, v);
    vs.push_back(std::move(v));
  }
  return fold(vs);
}

int run_gallery(const std::vector<std::string>& runs, bool all, const std::string& export_dir,
                std::ostream& out) {
  if (!export_dir.empty()) {
    std::filesystem::create_directories(export_dir);
    for (const auto& n : gallery_list()) {
      std::string path = (std::filesystem::path(export_dir) / (n + ".mlat")).string();
      std::ofstream f(path);
      if (!f) throw Error("cannot write " + path);
      f << serialize(*build_gallery(n).structure);
      out << "EXPORTED: " << path << "\n";
    }
    return kHolds;
  }
  std::vector<std::string> names = all ? gallery_list() : runs;
  if (names.empty()) {
    for (const auto& n : gallery_list()) out << "GALLERY: " << n << "\n";
    return kHolds;
  }
  for (const auto& n : names)
    if (!gallery_has(n)) throw UsageError("unknown gallery entry '" + n + "'");
  for (const auto& n : names) build_gallery(n);
  std::vector<std::future<RegressionResult>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, [n] { return run_regression(n); }));
  std::vector<Verdict> vs;
  for (auto& j : jobs) {
    RegressionResult r = j.get();
    out << format_regression(r);
    vs.push_back(r.summary);
  }
  return fold(vs);
}

int run_search(const Common& c, int max_size, const std::string& target, std::size_t budget,
               const std::string& out_dir, unsigned threads, std::ostream& out) {
  SearchOptions o;
  o.max_size = max_size;
  o.target = parse_target(target);
  o.budget = budget;
  o.threads = threads;
  if (!c.spec.empty() || !c.gallery.empty()) {
    StructurePtr s = load(c);
    o.seeds.emplace_back(s, window_for(*s, c));
  }
  SearchResult r = search_small_structures(o);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  out << "TARGET: " << class_name(o.target.first) << "," << class_name(o.target.second) << "\n";
  out << "MONOIDS: " << r.monoids << "\n";
  out << "EXAMINED: " << r.examined << "\n";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const SearchWitness& wt = r.witnesses[i];
    out << "WITNESS " << i + 1 << ": " << wt.structure->name();
    if (!out_dir.empty()) {
      std::string path = (std::filesystem::path(out_dir) / ("witness-" + std::to_string(i + 1) + ".mlat")).string();
      std::ofstream f(path);
      if (!f) throw Error("cannot write " + path);
      f << wt.spec;
      out << " file=" << path;
    }
    out << "\n";
  }
  out << "WITNESSES: " << r.witnesses.size() << "\n";
  out << "STATUS: " << (r.partial ? "partial (budget exhausted)" : "complete") << "\n";
  return r.partial ? kUnknown : kHolds;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-order structure workbench"};
  app.require_subcommand(1);
  Common common;

  auto* classify = app.add_subcommand("classify", "classify a structure");
  add_common(classify, common);
  bool strict = false;
  classify->add_flag("--strict", strict, "exit 1 when the cancellation warning fires");

  auto* envelope = app.add_subcommand("envelope", "envelope or characterization extremum");
  add_common(envelope, common);
  std::string kind = "upper", xs, ys, cand;
  envelope->add_option("--kind", kind, "upper, lower or an extremum id");
  envelope->add_option("--x", xs, "first argument")->required();
  envelope->add_option("--y", ys, "second argument")->required();
  envelope->add_option("--candidate", cand, "verify this value instead of searching");

  auto* laws = app.add_subcommand("laws", "check laws on the window");
  add_common(laws, common);
  std::vector<std::string> law_ids;
  int nmax = 8;
  laws->add_option("--law", law_ids, "law id (repeatable)");
  laws->add_option("--nmax", nmax, "largest multiplier for scaled laws");

  auto* gallery = app.add_subcommand("gallery", "list or run gallery regressions");
  std::vector<std::string> runs;
  bool all = false;
  std::string export_dir;
  gallery->add_option("--run", runs, "entry to run (repeatable)");
  gallery->add_flag("--all", all, "run every entry");
  gallery->add_option("--export", export_dir, "write every entry as a spec file into DIR");

  auto* search = app.add_subcommand("search", "search small finite structures");
  add_common(search, common);
  int max_size = 4;
  std::string target;
  std::size_t budget = 100000;
  std::string out_dir;
  unsigned threads = 0;
  search->add_option("--max-size", max_size, "largest carrier size (<= 6)");
  search->add_option("--target", target, "WEAKER,STRONGER")->required();
  search->add_option("--budget", budget, "candidates to classify");
  search->add_option("--out", out_dir, "directory for witness spec files");
  search->add_option("--threads", threads, "worker threads (0 = auto)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*classify) return run_classify(common, strict, out);
    if (*envelope) return run_envelope(common, kind, xs, ys, cand, out);
    if (*laws) return run_laws(common, law_ids, nmax, out);
    if (*gallery) return run_gallery(runs, all, export_dir, out);
    if (*search) return run_search(common, max_size, target, budget, out_dir, threads, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const AxiomViolation& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mixlat
