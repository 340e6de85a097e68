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

#include <fstream>
#include <sstream>
#include <string>

#include "mixlat/gallery.hpp"
#include "mixlat/spec_io.hpp"

#ifndef MIXLAT_SOURCE_DIR
#define MIXLAT_SOURCE_DIR "."
#endif

using namespace mixlat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("catalog") {
  const auto& names = gallery_list();
  REQUIRE(names.size() == 8);
  CHECK(names.front() == "nonneg-integers-mod3-cone");
  CHECK(names.back() == "torsion-z2");
  CHECK(gallery_has("diag-step"));
  CHECK_FALSE(gallery_has("no-such-entry"));
  CHECK_THROWS_AS(build_gallery("no-such-entry"), UsageError);
  CHECK(&build_gallery("double-lex") == &build_gallery("double-lex"));
}

TEST_CASE("entries are consistent") {
  for (const std::string& name : gallery_list()) {
    CAPTURE(name);
    const GalleryEntry& e = build_gallery(name);
    CHECK(e.structure->name() == name);
    CHECK(e.window == e.structure->default_window());
    CHECK_FALSE(e.description.empty());
    CHECK(e.expectations.size() >= 3);
    CHECK(e.structure->upper_hint());
    CHECK(e.structure->lower_hint());
  }
}

TEST_CASE("spec files in gallery/ match the built structures") {
  for (const std::string& name : gallery_list()) {
    CAPTURE(name);
    const GalleryEntry& e = build_gallery(name);
    std::string path = std::string(MIXLAT_SOURCE_DIR) + "/gallery/" + name + ".mlat";
    std::string text = slurp(path);
    REQUIRE_FALSE(text.empty());
    CHECK(text == serialize(*e.structure));
    StructurePtr s = load_spec_file(path);
    CHECK(serialize(*s) == text);
  }
}

TEST_CASE("every regression holds") {
  for (const std::string& name : gallery_list()) {
    CAPTURE(name);
    RegressionResult r = run_regression(name);
    for (const ExpectationResult& x : r.results) {
      CAPTURE(x.key);
      CAPTURE(x.actual);
      CHECK(x.ok);
    }
    CHECK(r.summary.is_holds());
    std::string text = format_regression(r);
    CHECK(text.find("REGRESSION " + name + ": HOLDS") != std::string::npos);
  }
}

TEST_CASE("regression text marks origins") {
  RegressionResult r = run_regression("halfline-gap-M");
  std::string text = format_regression(r);
  CHECK(text.find("EXPECT LOWER 3 2: MATCH expected=0 window-verified origin=cited") != std::string::npos);
  CHECK(text.find("origin=derived") != std::string::npos);
}
