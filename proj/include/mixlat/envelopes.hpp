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

#ifndef MIXLAT_ENVELOPES_HPP
#define MIXLAT_ENVELOPES_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mixlat/structure.hpp"
#include "mixlat/verdict.hpp"

namespace mixlat {

enum class Certificate { Exact, WindowVerified, NonexistentEmpty, NonexistentNoLeast, Unknown };

std::string certificate_text(Certificate c);

struct EnvelopeResult {
  std::optional<Element> value;
  Certificate cert = Certificate::Unknown;
  /// Up to 16 in-window members of the defining set.
  std::vector<Element> sample;
  std::string note;
  /// MIN-G / MIN-G-DUAL: whether the closed-form link was confirmed.
  std::optional<bool> link_holds;

  bool found() const {
    return value && (cert == Certificate::Exact || cert == Certificate::WindowVerified);
  }
  bool absent() const {
    return cert == Certificate::NonexistentEmpty || cert == Certificate::NonexistentNoLeast;
  }
};

enum class ExtremumKind {
  UpperEnv,
  LowerEnv,
  MinA,
  MinAConstrained,
  MinB,
  MinBConstrained,
  MaxWA,
  MaxWB,
  MinG,
  MinGDual
};

std::string extremum_name(ExtremumKind k);
std::optional<ExtremumKind> parse_extremum(std::string_view text);

struct EngineOptions {
  bool use_hints = true;
  /// Precompute both order relations on the search box as bit matrices.
  bool dense = true;
};

/// Envelope and extremum search over the padded box of a window.
///
/// Results for the two envelopes are memoised; the engine may be shared
/// between threads.
class EnvelopeEngine {
 public:
  EnvelopeEngine(StructurePtr s, Window w, EngineOptions opts = {});

  const TwoOrderStructure& structure() const { return *s_; }
  const StructurePtr& structure_ptr() const { return s_; }
  const Window& window() const { return w_; }
  /// Quantification points (the unpadded window).
  const std::vector<Element>& quant() const { return quant_; }
  /// Search points (the padded window).
  const std::vector<Element>& box() const { return box_; }
  bool exact() const { return s_->carrier().kind() == CarrierKind::Finite; }

  bool le(const Element& a, const Element& b) const;
  bool sle(const Element& a, const Element& b) const;
  bool compare(Which w, const Element& a, const Element& b) const {
    return w == Which::Initial ? le(a, b) : sle(a, b);
  }

  const EnvelopeResult& upper(const Element& x, const Element& y);
  const EnvelopeResult& lower(const Element& x, const Element& y);
  /// Search without hints or memo.
  EnvelopeResult brute_upper(const Element& x, const Element& y) const;
  EnvelopeResult brute_lower(const Element& x, const Element& y) const;

  EnvelopeResult extremum(ExtremumKind kind, const Element& u, const Element& v);
  Verdict verify(ExtremumKind kind, const Element& x, const Element& y, const Element& candidate) const;
  /// Least upper bound of {a, b} in a single order.
  EnvelopeResult supremum(Which which, const Element& a, const Element& b) const;

  std::optional<int> index_of(const Element& e) const;
  /// Relation between two search-box points given by index.
  bool rel_at(Which which, int i, int j) const;

 private:
  using Bits = std::vector<std::uint64_t>;
  struct PairHash {
    std::size_t operator()(const std::pair<Element, Element>& p) const noexcept {
      ElementHash h;
      return h(p.first) * 1000003u ^ h(p.second);
    }
  };
  using Memo = std::unordered_map<std::pair<Element, Element>, EnvelopeResult, PairHash>;

  void build_dense();
  // Row of {z : a ⪯ z} (up) or {z : z ⪯ a} (down) over the box.
  Bits row(Which which, bool up, const Element& a) const;
  Bits members(const std::function<bool(int)>& pred) const;
  EnvelopeResult settle(const Bits& d, bool least, bool args_inside, const std::string& what,
                        Which order = Which::Initial) const;
  EnvelopeResult with_hint(bool upper, const Element& x, const Element& y) const;

  StructurePtr s_;
  Window w_;
  Window search_;
  EngineOptions opts_;
  std::vector<Element> quant_;
  std::vector<Element> box_;
  std::unordered_map<Element, int, ElementHash> index_;
  std::size_t words_ = 0;
  bool dense_ = false;
  // [which][up/down] rows, flattened
  std::vector<std::uint64_t> rows_[2][2];
  Bits rim_;
  mutable std::mutex mu_;
  Memo upper_memo_;
  Memo lower_memo_;
};

EnvelopeResult upper_envelope(const TwoOrderStructure& s, const Element& x, const Element& y,
                              const Window& w);
EnvelopeResult lower_envelope(const TwoOrderStructure& s, const Element& x, const Element& y,
                              const Window& w);
EnvelopeResult characterization_extremum(const TwoOrderStructure& s, ExtremumKind kind,
                                         const Element& u, const Element& v, const Window& w);
Verdict verify_envelope(const TwoOrderStructure& s, ExtremumKind kind, const Element& x,
                        const Element& y, const Element& candidate, const Window& w);
EnvelopeResult order_supremum(const TwoOrderStructure& s, Which which, const Element& a,
                              const Element& b, const Window& w);

/// Compares hint values with brute force on every window pair.
std::optional<std::pair<std::string, Verdict>> verify_hints(const TwoOrderStructure& s,
                                                            const Window& w);

/// Checks the linking equations between envelopes and the characterization
/// extrema for one pair. Semigroup links run on the structure itself when
/// its hypotheses hold; for groups they run on the positive cones.
class CrossChecker {
 public:
  CrossChecker(StructurePtr s, Window w);
  ~CrossChecker();
  Verdict check(const Element& u, const Element& v);

  bool a_side() const { return a_ != nullptr; }
  bool b_side() const { return b_ != nullptr; }

 private:
  StructurePtr s_;
  Window w_;
  std::unique_ptr<EnvelopeEngine> main_;
  StructurePtr a_, b_;
  std::unique_ptr<EnvelopeEngine> a_eng_, b_eng_;
  bool a_positive_ = false;
  bool b_positive_ = false;
};

Verdict oracle_cross_check(const StructurePtr& s, const Element& u, const Element& v,
                           const Window& w);

}  // namespace mixlat

#endif  // MIXLAT_ENVELOPES_HPP
