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

#ifndef MIXLAT_GALLERY_HPP
#define MIXLAT_GALLERY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixlat/classify.hpp"
#include "mixlat/envelopes.hpp"

namespace mixlat {

class RegressionContext;

/// Where an expected value comes from: stated for the example in the
/// literature, or computed independently (hand derivation or the test oracle).
enum class Origin { Cited, Derived };

struct Expectation {
  std::string key;
  std::string expected;
  Origin origin = Origin::Cited;
  std::string note;
  std::function<std::string(RegressionContext&)> actual;
};

struct GalleryEntry {
  std::string name;
  std::string description;
  /// Spec text the structure is built from (hints and facts are attached in code).
  std::string spec_text;
  StructurePtr structure;
  Window window;
  std::vector<Expectation> expectations;
};

const std::vector<std::string>& gallery_list();
bool gallery_has(std::string_view name);
/// Built once and cached. Throws UsageError for an unknown name.
const GalleryEntry& build_gallery(std::string_view name);

/// Shared state while an entry's expectations are evaluated.
class RegressionContext {
 public:
  explicit RegressionContext(const GalleryEntry& e);
  const GalleryEntry& entry() const { return entry_; }
  const TwoOrderStructure& structure() const { return *entry_.structure; }
  EnvelopeEngine& engine() { return engine_; }
  const ClassificationReport& report();
  Element el(std::string_view text) const { return structure().carrier().parse_element(text); }

 private:
  const GalleryEntry& entry_;
  EnvelopeEngine engine_;
  std::optional<ClassificationReport> report_;
};

struct ExpectationResult {
  std::string key;
  std::string expected;
  std::string actual;
  Origin origin = Origin::Cited;
  bool ok = false;
};

struct RegressionResult {
  std::string name;
  /// Holds iff every expectation matched; Fails lists the mismatched keys.
  Verdict summary;
  std::vector<ExpectationResult> results;
};

RegressionResult run_regression(std::string_view name);
std::string format_regression(const RegressionResult& r);

/// "FAILS witness=(..) n=2" style rendering without the window suffix.
std::string render_verdict(const Verdict& v, const Carrier& c, bool with_witness = true);
std::string render_envelope(const EnvelopeResult& r, const Carrier& c);

}  // namespace mixlat

#endif  // MIXLAT_GALLERY_HPP
