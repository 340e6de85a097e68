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

#ifndef MIXLAT_SPEC_IO_HPP
#define MIXLAT_SPEC_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mixlat/structure.hpp"

namespace mixlat {

struct SpecEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
  /// Column of the first character of `value`.
  std::size_t column = 0;
};

struct SpecSection {
  std::string name;
  std::size_t line = 0;
  std::vector<SpecEntry> entries;

  const SpecEntry* find(std::string_view key) const;
};

/// Sections of a spec file in document order.
struct SpecDocument {
  std::vector<SpecSection> sections;

  const SpecSection* find(std::string_view name) const;
};

/// Syntax pass. Throws ParseError with the offending position.
SpecDocument parse_spec(std::string_view text);

/// Semantic pass without validation.
TwoOrderStructure build_unvalidated(const SpecDocument& doc);

/// Semantic pass plus carrier/order validation on the default window.
/// Throws ParseError or AxiomViolation.
StructurePtr build_structure(const SpecDocument& doc);

StructurePtr load_spec_file(const std::string& path);

/// Parses "lin: x1 >= 0 & mod: x1 = 0 (mod 3) | points: (0)" against a carrier.
PositiveSet parse_positive_set(std::string_view text, const Carrier& c);

/// Canonical spec text. Hints and recorded facts are not serialized.
std::string serialize(const TwoOrderStructure& s);

}  // namespace mixlat

#endif  // MIXLAT_SPEC_IO_HPP
