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

#ifndef MIXLAT_VERDICT_HPP
#define MIXLAT_VERDICT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixlat/carrier.hpp"
#include "mixlat/window.hpp"

namespace mixlat {

enum class Outcome { Holds, Fails, Unknown };

/// Three-valued result of a quantified check.
struct Verdict {
  Outcome outcome = Outcome::Holds;
  std::vector<Element> witness;
  /// Scalars attached to the witness (n, m for scaling laws).
  std::vector<std::int64_t> multipliers;
  /// Window the verdict is scoped to; empty on finite carriers.
  std::optional<Window> scope;
  std::string note;
  std::size_t checked = 0;
  std::size_t undecided = 0;
  bool unsupported = false;

  static Verdict holds(std::optional<Window> scope = std::nullopt) {
    Verdict v;
    v.scope = std::move(scope);
    return v;
  }
  static Verdict fails(std::vector<Element> witness, std::string note = {},
                       std::optional<Window> scope = std::nullopt) {
    Verdict v;
    v.outcome = Outcome::Fails;
    v.witness = std::move(witness);
    v.note = std::move(note);
    v.scope = std::move(scope);
    return v;
  }
  static Verdict unknown(std::string note, std::optional<Window> scope = std::nullopt) {
    Verdict v;
    v.outcome = Outcome::Unknown;
    v.note = std::move(note);
    v.scope = std::move(scope);
    return v;
  }
  static Verdict unsupported_op(std::string note) {
    Verdict v = unknown(std::move(note));
    v.unsupported = true;
    return v;
  }

  bool is_holds() const { return outcome == Outcome::Holds; }
  bool is_fails() const { return outcome == Outcome::Fails; }
  bool is_unknown() const { return outcome == Outcome::Unknown; }
};

const char* outcome_text(Outcome o);

std::string format_witness(const Carrier& c, const std::vector<Element>& w);

/// "ID: HOLDS|FAILS|UNKNOWN [witness=(...)] [n=..] [window=...]".
std::string format_verdict(const std::string& id, const Verdict& v, const Carrier& c);

}  // namespace mixlat

#endif  // MIXLAT_VERDICT_HPP
