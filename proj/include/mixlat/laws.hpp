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

#ifndef MIXLAT_LAWS_HPP
#define MIXLAT_LAWS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixlat/envelopes.hpp"

namespace mixlat {

enum class LawId {
  P0,
  P4,
  P5B,
  P1,
  P2,
  P3,
  R0,
  TransUp,
  TransLow,
  PosA,
  PosB,
  MlsSleq,
  WmlsIneq,
  BIneq,
  QrB,
  QrC,
  QrD,
  QrE,
  QrF,
  ScaleLow,
  ScaleUp,
  ScaleZero,
  DivLeq,
  DivSleq
};

std::string law_name(LawId id);
std::optional<LawId> parse_law(std::string_view text);
const std::vector<LawId>& all_laws();
/// Number of quantified elements.
int law_arity(LawId id);
bool law_group_only(LawId id);
/// SCALE-* and DIV-* range over multipliers 1..nmax.
bool law_scaled(LawId id);
/// Quantified formula as listed in docs/laws.md.
std::string law_formula(LawId id);

/// Universal check over window tuples in graded order. Tuples whose
/// envelope subterms cannot be resolved are excluded and counted.
Verdict check_law(EnvelopeEngine& eng, LawId law, int nmax = 8);
Verdict check_law(const StructurePtr& s, LawId law, const Window& w, int nmax = 8);

/// One instance; Unknown when a subterm is unresolved.
Outcome evaluate_law_at(EnvelopeEngine& eng, LawId law, const std::vector<Element>& tuple,
                        std::int64_t n = 1, std::int64_t m = 1);

/// Bounded search for x with x ⋠ 0 and n·x ⪯ y for n = 1..nmax. A hit is
/// reported as Fails only when the structure records a proof for that
/// order; otherwise it is an Unknown candidate.
Verdict check_archimedean(EnvelopeEngine& eng, Which which, int nmax = 8);

/// Window points x ≠ 0 with k·x = 0 for some 2 ≤ k ≤ kmax, with the least k.
std::vector<std::pair<Element, int>> finite_order_elements(const TwoOrderStructure& s,
                                                           const Window& w, int kmax);

/// (x∨0 + 0∨(−x), 0∨x + (−x)∨0). Throws EnvelopeUnresolved.
std::pair<Element, Element> abs_asym(EnvelopeEngine& eng, const Element& x);

/// Linear map on components: rows are output components (free, then
/// torsion), columns input components. Torsion outputs are reduced.
struct HomomorphismSpec {
  std::vector<std::vector<std::int64_t>> matrix;
  StructurePtr domain;
  StructurePtr codomain;

  Element apply(const Element& x) const;
};

struct HomomorphismReport {
  Verdict additive;
  Verdict hom;
  Verdict abs_lu;
  Verdict abs_ul;
  /// HOM, ABS-LU and ABS-UL have the same outcome.
  bool agree = false;
};

/// Domain tuples come from `w`; codomain envelopes use the codomain's window.
HomomorphismReport check_homomorphism(const HomomorphismSpec& t, const Window& w);

/// Group of formal differences of a cancellative structure. On grid
/// carriers the orders keep their positive sets.
StructurePtr group_of_differences(const StructurePtr& u, const Window& w);

struct Extension {
  StructurePtr structure;
  /// POSITIVE-A on U, NATORD-LEQ and CANC-LEQ on the target.
  Verdict preconditions;
  /// Every window point is ⊑-below some element of U.
  Verdict domination;
  Verdict b_structure;
  bool flagged = false;
};

/// Specific order on the target carrier: a ⊑ b iff b = a + w with w in U.
Extension extend_specific_order(const StructurePtr& u, const StructurePtr& target, const Window& w);

}  // namespace mixlat

#endif  // MIXLAT_LAWS_HPP
