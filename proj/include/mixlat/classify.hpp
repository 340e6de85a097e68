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

#ifndef MIXLAT_CLASSIFY_HPP
#define MIXLAT_CLASSIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixlat/envelopes.hpp"

namespace mixlat {

enum class ClassId {
  AStructure,
  PositiveA,
  WeakMls,
  Mls,
  BStructure,
  PositiveB,
  Mlg,
  PreNormal,
  Normal,
  PreRegular,
  QuasiRegular,
  Regular
};

std::string class_name(ClassId id);
std::optional<ClassId> parse_class(std::string_view text);
const std::vector<ClassId>& all_classes();

/// Pairs (weaker, stronger) where the stronger class implies the weaker.
const std::vector<std::pair<ClassId, ClassId>>& class_implications();

struct ClassificationReport {
  std::string structure;
  std::optional<Window> window;
  std::vector<std::pair<ClassId, Verdict>> verdicts;
  std::vector<std::string> notes;

  const Verdict& at(ClassId id) const;
};

ClassificationReport classify_structure(EnvelopeEngine& eng);
ClassificationReport classify_structure(const StructurePtr& s, const Window& w);

/// "CLASS <id>: ..." lines followed by notes.
std::string format_report(const ClassificationReport& r, const Carrier& c);

enum class SubsetKind { ASubstructure, BSubstructure, MlSubsemigroup, MlSubgroup };

std::string subset_kind_name(SubsetKind k);
std::optional<SubsetKind> parse_subset_kind(std::string_view text);

/// Substructure test with envelopes taken in G. The subset must contain 0
/// and be closed under addition on the window (else UsageError).
Verdict classify_subset(EnvelopeEngine& g, const PositiveSet& sub, SubsetKind kind);
Verdict classify_subset(const StructurePtr& g, const PositiveSet& sub, SubsetKind kind,
                        const Window& w);

struct RegularElements {
  std::vector<Element> elements;
  /// Closure of the set under both envelopes, in window.
  Verdict closure;
};

/// Window points of the form u - v with u, v positive in both orders.
RegularElements regular_elements(EnvelopeEngine& g);
RegularElements regular_elements(const StructurePtr& g, const Window& w);

}  // namespace mixlat

#endif  // MIXLAT_CLASSIFY_HPP
