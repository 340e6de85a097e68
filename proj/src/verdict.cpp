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

#include "mixlat/verdict.hpp"

namespace mixlat {

const char* outcome_text(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "HOLDS";
    case Outcome::Fails: return "FAILS";
    case Outcome::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::string format_witness(const Carrier& c, const std::vector<Element>& w) {
  if (w.size() == 1) return c.format(w[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += c.format(w[i]);
  }
  return out + ")";
}

std::string format_verdict(const std::string& id, const Verdict& v, const Carrier& c) {
  std::string out = id + ": " + outcome_text(v.outcome);
  if (v.is_fails() && !v.witness.empty()) out += " witness=" + format_witness(c, v.witness);
  if (v.is_fails() && !v.multipliers.empty()) {
    static const char* names[] = {"n", "m"};
    for (std::size_t i = 0; i < v.multipliers.size(); ++i)
      out += std::string(" ") + (i < 2 ? names[i] : "k") + "=" + std::to_string(v.multipliers[i]);
  }
  if (v.scope && c.kind() == CarrierKind::Grid) out += " window=" + format_window(*v.scope);
  if (v.unsupported) out += " note=unsupported";
  return out;
}

}  // namespace mixlat
