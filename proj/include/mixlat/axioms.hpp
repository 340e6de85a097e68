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

#ifndef MIXLAT_AXIOMS_HPP
#define MIXLAT_AXIOMS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "mixlat/structure.hpp"
#include "mixlat/verdict.hpp"

namespace mixlat {

enum class AxiomId { PoCompat, CancLeq, CancSleq, NatordLeq, NatordSleq };

std::string axiom_name(AxiomId id);
std::optional<AxiomId> parse_axiom(std::string_view text);

/// PO-COMPAT: u ⪯ v implies u+w ⪯ v+w, both orders, all window triples.
/// CANC-*: u ⪯ v iff u+w ⪯ v+w. NATORD-*: u ⪯ v iff v = u+w for some
/// carrier element w (exact on grid carriers, where w = v-u is forced).
Verdict check_axiom(const TwoOrderStructure& s, AxiomId id, const Window& w);

Verdict check_reflexive(const TwoOrderStructure& s, Which which, const Window& w);
Verdict check_antisymmetric(const TwoOrderStructure& s, Which which, const Window& w);
Verdict check_transitive(const TwoOrderStructure& s, Which which, const Window& w);
Verdict check_compatible(const TwoOrderStructure& s, Which which, const Window& w);

/// Scope to attach to verdicts: the window on grid carriers, none on finite ones.
std::optional<Window> scope_of(const TwoOrderStructure& s, const Window& w);

}  // namespace mixlat

#endif  // MIXLAT_AXIOMS_HPP
