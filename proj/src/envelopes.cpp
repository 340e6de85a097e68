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

#include "mixlat/envelopes.hpp"

#include <algorithm>
#include <bit>

#include "mixlat/axioms.hpp"

namespace mixlat {

namespace {

constexpr std::size_t kDenseLimit = 8192;
constexpr std::size_t kDiffTableLimit = std::size_t{1} << 23;
constexpr std::size_t kSampleSize = 16;

bool test_bit(const std::uint64_t* row, std::size_t j) { return (row[j >> 6] >> (j & 63)) & 1u; }
void set_bit(std::uint64_t* row, std::size_t j) { row[j >> 6] |= std::uint64_t{1} << (j & 63); }

template <class Fn>
void for_each_bit(const std::vector<std::uint64_t>& bits, Fn&& fn) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word) {
      int b = std::countr_zero(word);
      if (fn(static_cast<int>(w * 64 + b))) return;
      word &= word - 1;
    }
  }
}

bool is_min_kind(ExtremumKind k) {
  return k != ExtremumKind::LowerEnv && k != ExtremumKind::MaxWA && k != ExtremumKind::MaxWB;
}

}  // namespace

std::string certificate_text(Certificate c) {
  switch (c) {
    case Certificate::Exact: return "exact";
    case Certificate::WindowVerified: return "window-verified";
    case Certificate::NonexistentEmpty: return "nonexistent-in-window (empty)";
    case Certificate::NonexistentNoLeast: return "nonexistent-in-window (no extremum)";
    case Certificate::Unknown: return "unknown";
  }
  return "unknown";
}

std::string extremum_name(ExtremumKind k) {
  switch (k) {
    case ExtremumKind::UpperEnv: return "upper";
    case ExtremumKind::LowerEnv: return "lower";
    case ExtremumKind::MinA: return "MIN-A";
    case ExtremumKind::MinAConstrained: return "MIN-A-CONSTRAINED";
    case ExtremumKind::MinB: return "MIN-B";
    case ExtremumKind::MinBConstrained: return "MIN-B-CONSTRAINED";
    case ExtremumKind::MaxWA: return "MAX-W-A";
    case ExtremumKind::MaxWB: return "MAX-W-B";
    case ExtremumKind::MinG: return "MIN-G";
    case ExtremumKind::MinGDual: return "MIN-G-DUAL";
  }
  return "?";
}

std::optional<ExtremumKind> parse_extremum(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(ExtremumKind::MinGDual); ++i) {
    auto k = static_cast<ExtremumKind>(i);
    if (extremum_name(k) == text) return k;
  }
  if (text == "join" || text == "upper-envelope") return ExtremumKind::UpperEnv;
  if (text == "meet" || text == "lower-envelope") return ExtremumKind::LowerEnv;
  return std::nullopt;
}

EnvelopeEngine::EnvelopeEngine(StructurePtr s, Window w, EngineOptions opts)
    : s_(std::move(s)), w_(std::move(w)), opts_(opts) {
  const Carrier& c = s_->carrier();
  quant_ = enumerate_window(c, w_);
  box_ = enumerate_search_box(c, w_);
  search_ = w_.padded();
  for (std::size_t i = 0; i < box_.size(); ++i) index_.emplace(box_[i], static_cast<int>(i));
  words_ = (box_.size() + 63) / 64;
  rim_.assign(words_, 0);
  if (c.kind() == CarrierKind::Grid)
    for (std::size_t i = 0; i < box_.size(); ++i)
      if (search_.on_rim(box_[i])) set_bit(rim_.data(), i);
  if (opts_.dense && box_.size() <= kDenseLimit) build_dense();
}

void EnvelopeEngine::build_dense() {
  const std::size_t n = box_.size();
  const Carrier& c = s_->carrier();
  for (auto& a : rows_)
    for (auto& r : a) r.assign(n * words_, 0);
  auto record = [&](int which, std::size_t i, std::size_t j) {
    set_bit(rows_[which][0].data() + i * words_, j);
    set_bit(rows_[which][1].data() + j * words_, i);
  };
  if (c.kind() == CarrierKind::Finite) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (int which = 0; which < 2; ++which)
          if (s_->compare(static_cast<Which>(which), box_[i], box_[j])) record(which, i, j);
    dense_ = true;
    return;
  }
  // Grid: both relations depend only on the ambient difference, so tabulate
  // the difference box once.
  const std::size_t rank = c.rank();
  const std::int64_t den = c.integral() ? 1 : w_.q;
  std::vector<std::int64_t> k0(rank), extent(rank), stride(rank);
  std::size_t cells = 1;
  for (std::size_t k = rank; k-- > 0;) {
    k0[k] = ceil_int(search_.bounds[k].first * den);
    std::int64_t k1 = floor_int(search_.bounds[k].second * den);
    extent[k] = std::max<std::int64_t>(1, k1 - k0[k] + 1);
    stride[k] = static_cast<std::int64_t>(cells);
    cells *= static_cast<std::size_t>(2 * extent[k] - 1);
  }
  std::size_t tcount = 1;
  for (auto m : c.moduli()) tcount *= static_cast<std::size_t>(m);
  if (cells * tcount > kDiffTableLimit) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (int which = 0; which < 2; ++which)
          if (s_->compare(static_cast<Which>(which), box_[i], box_[j])) record(which, i, j);
    dense_ = true;
    return;
  }
  auto tors_index = [&](const Residues& t) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < t.size(); ++k) idx = idx * c.moduli()[k] + t[k];
    return idx;
  };
  std::vector<std::int64_t> base(n);
  std::vector<std::size_t> tidx(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t b = 0;
    for (std::size_t k = 0; k < rank; ++k) {
      Rational scaled = box_[i].coords[k] * den;
      b += (scaled.numerator() - k0[k]) * stride[k];
    }
    base[i] = b;
    tidx[i] = tors_index(box_[i].tors);
  }
  std::int64_t center = 0;
  for (std::size_t k = 0; k < rank; ++k) center += (extent[k] - 1) * stride[k];
  // residue differences
  std::vector<Residues> tvals;
  {
    Element z = c.zero();
    std::vector<std::int64_t> pos(c.moduli().size(), 0);
    for (std::size_t t = 0; t < tcount; ++t) {
      Residues r(pos.begin(), pos.end());
      tvals.push_back(r);
      for (std::size_t k = pos.size(); k-- > 0;) {
        if (++pos[k] < c.moduli()[k]) break;
        pos[k] = 0;
      }
    }
  }
  std::vector<std::size_t> tdiff(tcount * tcount);
  for (std::size_t a = 0; a < tcount; ++a)
    for (std::size_t b = 0; b < tcount; ++b) {
      Residues d(tvals[a].size());
      for (std::size_t k = 0; k < d.size(); ++k) {
        std::int64_t m = c.moduli()[k];
        d[k] = ((tvals[b][k] - tvals[a][k]) % m + m) % m;
      }
      tdiff[a * tcount + b] = tors_index(d);
    }
  std::vector<std::uint8_t> table(cells * tcount);
  {
    std::vector<std::int64_t> pos(rank, 0);
    Element d = c.zero();
    for (std::size_t cell = 0; cell < cells; ++cell) {
      std::size_t rem = cell;
      for (std::size_t k = rank; k-- > 0;) {
        std::size_t span = static_cast<std::size_t>(2 * extent[k] - 1);
        std::int64_t off = static_cast<std::int64_t>(rem % span) - (extent[k] - 1);
        rem /= span;
        d.coords[k] = Rational(off, den);
      }
      for (std::size_t t = 0; t < tcount; ++t) {
        d.tors = tvals[t];
        std::uint8_t bits = 0;
        if (s_->initial().positive_set().contains(d)) bits |= 1;
        if (s_->specific().positive_set().contains(d)) bits |= 2;
        table[cell * tcount + t] = bits;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t cell = static_cast<std::size_t>(base[j] - base[i] + center);
      std::uint8_t bits = table[cell * tcount + tdiff[tidx[i] * tcount + tidx[j]]];
      if (bits & 1) record(0, i, j);
      if (bits & 2) record(1, i, j);
    }
  dense_ = true;
}

std::optional<int> EnvelopeEngine::index_of(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool EnvelopeEngine::rel_at(Which which, int i, int j) const {
  if (dense_) return test_bit(rows_[which == Which::Initial ? 0 : 1][0].data() + i * words_, j);
  return s_->compare(which, box_[i], box_[j]);
}

bool EnvelopeEngine::le(const Element& a, const Element& b) const {
  if (dense_) {
    auto i = index_of(a), j = index_of(b);
    if (i && j) return test_bit(rows_[0][0].data() + *i * words_, *j);
  }
  return s_->le(a, b);
}

bool EnvelopeEngine::sle(const Element& a, const Element& b) const {
  if (dense_) {
    auto i = index_of(a), j = index_of(b);
    if (i && j) return test_bit(rows_[1][0].data() + *i * words_, *j);
  }
  return s_->sle(a, b);
}

EnvelopeEngine::Bits EnvelopeEngine::row(Which which, bool up, const Element& a) const {
  const int w = which == Which::Initial ? 0 : 1;
  if (dense_) {
    if (auto i = index_of(a)) {
      const std::uint64_t* r = rows_[w][up ? 0 : 1].data() + *i * words_;
      return Bits(r, r + words_);
    }
  }
  Bits out(words_, 0);
  for (std::size_t j = 0; j < box_.size(); ++j) {
    bool rel = up ? s_->compare(which, a, box_[j]) : s_->compare(which, box_[j], a);
    if (rel) set_bit(out.data(), j);
  }
  return out;
}

EnvelopeEngine::Bits EnvelopeEngine::members(const std::function<bool(int)>& pred) const {
  Bits out(words_, 0);
  for (std::size_t j = 0; j < box_.size(); ++j)
    if (pred(static_cast<int>(j))) set_bit(out.data(), j);
  return out;
}

EnvelopeResult EnvelopeEngine::settle(const Bits& d, bool least, bool args_inside,
                                      const std::string& what, Which order) const {
  auto bit_le = [&](int i, int j) { return rel_at(order, i, j); };
  EnvelopeResult r;
  for_each_bit(d, [&](int j) {
    r.sample.push_back(box_[j]);
    return r.sample.size() >= kSampleSize;
  });
  if (r.sample.empty()) {
    if (args_inside || exact()) {
      r.cert = Certificate::NonexistentEmpty;
      r.note = what + ": no candidate in search box";
    } else {
      r.cert = Certificate::Unknown;
      r.note = what + ": arguments outside search box";
    }
    return r;
  }
  int cur = -1;
  for_each_bit(d, [&](int j) {
    if (cur < 0 || (least ? bit_le(j, cur) : bit_le(cur, j))) cur = j;
    return false;
  });
  bool ok = true;
  for_each_bit(d, [&](int j) {
    if (!(least ? bit_le(cur, j) : bit_le(j, cur))) ok = false;
    return !ok;
  });
  // Undecided only when an extremal element of the set sits on the rim.
  bool rim_extremal = false;
  if (!ok && !exact()) {
    for_each_bit(d, [&](int j) {
      if (!test_bit(rim_.data(), j)) return false;
      bool extremal = true;
      for_each_bit(d, [&](int i) {
        if (i != j && (least ? bit_le(i, j) : bit_le(j, i))) extremal = false;
        return !extremal;
      });
      rim_extremal = extremal;
      return rim_extremal;
    });
  }
  if (ok) {
    r.value = box_[cur];
    if (exact()) {
      r.cert = Certificate::Exact;
    } else if (test_bit(rim_.data(), cur)) {
      r.cert = Certificate::Unknown;
      r.note = what + ": candidate on search-box rim";
    } else {
      r.cert = Certificate::WindowVerified;
    }
    return r;
  }
  if (exact() || !rim_extremal) {
    r.cert = Certificate::NonexistentNoLeast;
    r.note = what + (least ? ": no least element" : ": no greatest element");
  } else {
    r.cert = Certificate::Unknown;
    r.note = what + ": extremal element on search-box rim";
  }
  return r;
}

EnvelopeResult EnvelopeEngine::brute_upper(const Element& x, const Element& y) const {
  Bits d = row(Which::Specific, true, x);
  Bits b = row(Which::Initial, true, y);
  for (std::size_t k = 0; k < words_; ++k) d[k] &= b[k];
  return settle(d, true, search_.inside(x) && search_.inside(y), "upper envelope");
}

EnvelopeResult EnvelopeEngine::brute_lower(const Element& x, const Element& y) const {
  Bits d = row(Which::Specific, false, x);
  Bits b = row(Which::Initial, false, y);
  for (std::size_t k = 0; k < words_; ++k) d[k] &= b[k];
  return settle(d, false, search_.inside(x) && search_.inside(y), "lower envelope");
}

EnvelopeResult EnvelopeEngine::with_hint(bool upper, const Element& x, const Element& y) const {
  const EnvelopeHint& hint = upper ? s_->upper_hint() : s_->lower_hint();
  if (!opts_.use_hints || !hint) return upper ? brute_upper(x, y) : brute_lower(x, y);
  std::optional<Element> h = hint(x, y);
  if (!h) {
    EnvelopeResult r = upper ? brute_upper(x, y) : brute_lower(x, y);
    if (r.found())
      throw InternalError(s_->name() + ": hint reports no " + (upper ? "upper" : "lower") +
                          " envelope at (" + s_->format(x) + "," + s_->format(y) +
                          ") but search found " + s_->format(*r.value));
    return r;
  }
  auto fail = [&](const std::string& why) {
    return InternalError(s_->name() + ": " + (upper ? "upper" : "lower") + " hint at (" +
                         s_->format(x) + "," + s_->format(y) + ") = " + s_->format(*h) + " " +
                         why);
  };
  if (!s_->carrier().contains(*h)) throw fail("is not a carrier element");
  bool member = upper ? (sle(x, *h) && le(y, *h)) : (sle(*h, x) && le(*h, y));
  if (!member) throw fail("is not in the defining set");
  Bits d = row(Which::Specific, upper, x);
  Bits b = row(Which::Initial, upper, y);
  for (std::size_t k = 0; k < words_; ++k) d[k] &= b[k];
  EnvelopeResult r;
  for_each_bit(d, [&](int j) {
    r.sample.push_back(box_[j]);
    return r.sample.size() >= kSampleSize;
  });
  bool ok = true;
  Element bad;
  auto hi = dense_ ? index_of(*h) : std::nullopt;
  if (hi) {
    // D must lie in the up (resp. down) set of h
    const std::uint64_t* hr = rows_[0][upper ? 0 : 1].data() + *hi * words_;
    for (std::size_t k = 0; k < words_ && ok; ++k) {
      std::uint64_t miss = d[k] & ~hr[k];
      if (miss) {
        ok = false;
        bad = box_[k * 64 + std::countr_zero(miss)];
      }
    }
  } else {
    for_each_bit(d, [&](int j) {
      if (!(upper ? s_->le(*h, box_[j]) : s_->le(box_[j], *h))) {
        ok = false;
        bad = box_[j];
        return true;
      }
      return false;
    });
  }
  if (!ok) throw fail("is not extremal, compare " + s_->format(bad));
  r.value = *h;
  r.cert = exact() ? Certificate::Exact : Certificate::WindowVerified;
  return r;
}

const EnvelopeResult& EnvelopeEngine::upper(const Element& x, const Element& y) {
  auto key = std::make_pair(x, y);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = upper_memo_.find(key);
    if (it != upper_memo_.end()) return it->second;
  }
  EnvelopeResult r = with_hint(true, x, y);
  std::lock_guard<std::mutex> lock(mu_);
  return upper_memo_.try_emplace(std::move(key), std::move(r)).first->second;
}

const EnvelopeResult& EnvelopeEngine::lower(const Element& x, const Element& y) {
  auto key = std::make_pair(x, y);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = lower_memo_.find(key);
    if (it != lower_memo_.end()) return it->second;
  }
  EnvelopeResult r = with_hint(false, x, y);
  std::lock_guard<std::mutex> lock(mu_);
  return lower_memo_.try_emplace(std::move(key), std::move(r)).first->second;
}

namespace {

// Membership predicate of the set whose extremum `kind` names.
// `a` is the envelope the MAX-W sets are defined from.
bool in_set(const TwoOrderStructure& s, ExtremumKind kind, const Element& u, const Element& v,
            const Element& w, const std::optional<Element>& a) {
  switch (kind) {
    case ExtremumKind::UpperEnv: return s.sle(u, w) && s.le(v, w);
    case ExtremumKind::LowerEnv: return s.sle(w, u) && s.le(w, v);
    case ExtremumKind::MinA: return s.le(u, s.add(w, v));
    case ExtremumKind::MinAConstrained: return s.le(u, s.add(w, v)) && s.sle(w, u);
    case ExtremumKind::MinB: return s.sle(u, s.add(w, v));
    case ExtremumKind::MinBConstrained: return s.sle(u, s.add(w, v)) && s.le(w, u);
    case ExtremumKind::MaxWA: return s.le(s.add(*a, w), s.add(u, v)) && s.sle(w, u);
    case ExtremumKind::MaxWB: return s.sle(s.add(*a, w), s.add(u, v)) && s.le(w, u);
    case ExtremumKind::MinG: return s.sle(s.zero(), w) && s.le(v, s.add(w, u));
    case ExtremumKind::MinGDual: return s.le(s.zero(), w) && s.sle(v, s.add(w, u));
  }
  return false;
}

}  // namespace

EnvelopeResult EnvelopeEngine::extremum(ExtremumKind kind, const Element& u, const Element& v) {
  if (kind == ExtremumKind::UpperEnv) return upper(u, v);
  if (kind == ExtremumKind::LowerEnv) return lower(u, v);
  const TwoOrderStructure& s = *s_;
  std::optional<Element> a;
  if (kind == ExtremumKind::MaxWA || kind == ExtremumKind::MaxWB) {
    const EnvelopeResult& env = kind == ExtremumKind::MaxWA ? upper(v, u) : upper(u, v);
    if (!env.found()) {
      EnvelopeResult r;
      r.cert = env.absent() ? env.cert : Certificate::Unknown;
      r.note = extremum_name(kind) + ": defining envelope unavailable";
      return r;
    }
    a = env.value;
  }
  Bits d = members([&](int j) { return in_set(s, kind, u, v, box_[j], a); });
  EnvelopeResult r = settle(d, is_min_kind(kind), search_.inside(u) && search_.inside(v),
                            extremum_name(kind));
  if ((kind == ExtremumKind::MinG || kind == ExtremumKind::MinGDual) && r.found() && s.is_group()) {
    // MIN-G: x∨y - x and y - y∧x; MIN-G-DUAL: y∨x - x and y - x∧y
    const bool dual = kind == ExtremumKind::MinGDual;
    const EnvelopeResult& up = dual ? upper(v, u) : upper(u, v);
    const EnvelopeResult& lo = dual ? lower(u, v) : lower(v, u);
    bool decided = false, ok = true;
    if (up.found()) {
      decided = true;
      ok = ok && s.sub(*up.value, u) == *r.value;
    }
    if (lo.found()) {
      decided = true;
      ok = ok && s.sub(v, *lo.value) == *r.value;
    }
    if (decided) r.link_holds = ok;
  }
  return r;
}

Verdict EnvelopeEngine::verify(ExtremumKind kind, const Element& x, const Element& y,
                               const Element& candidate) const {
  const TwoOrderStructure& s = *s_;
  auto scope = scope_of(s, w_);
  std::optional<Element> a;
  if (kind == ExtremumKind::MaxWA || kind == ExtremumKind::MaxWB) {
    EnvelopeResult env = kind == ExtremumKind::MaxWA ? brute_upper(y, x) : brute_upper(x, y);
    if (!env.found()) return Verdict::unknown("defining envelope unavailable", scope);
    a = env.value;
  }
  if (!s.carrier().contains(candidate) || !in_set(s, kind, x, y, candidate, a))
    return Verdict::fails({candidate}, "candidate is not in the defining set", scope);
  const bool least = is_min_kind(kind);
  Verdict v = Verdict::holds(scope);
  for (const Element& z : box_) {
    if (!in_set(s, kind, x, y, z, a)) continue;
    ++v.checked;
    if (!(least ? s.le(candidate, z) : s.le(z, candidate)))
      return Verdict::fails({z}, least ? "smaller member" : "larger member", scope);
  }
  return v;
}

EnvelopeResult EnvelopeEngine::supremum(Which which, const Element& a, const Element& b) const {
  Bits d = row(which, true, a);
  Bits e = row(which, true, b);
  for (std::size_t k = 0; k < words_; ++k) d[k] &= e[k];
  return settle(d, true, search_.inside(a) && search_.inside(b), "least upper bound", which);
}

namespace {

StructurePtr borrow(const TwoOrderStructure& s) {
  return StructurePtr(std::shared_ptr<void>(), &s);
}

}  // namespace

EnvelopeResult upper_envelope(const TwoOrderStructure& s, const Element& x, const Element& y,
                              const Window& w) {
  EnvelopeEngine e(borrow(s), w, {.use_hints = true, .dense = false});
  return e.upper(x, y);
}

EnvelopeResult lower_envelope(const TwoOrderStructure& s, const Element& x, const Element& y,
                              const Window& w) {
  EnvelopeEngine e(borrow(s), w, {.use_hints = true, .dense = false});
  return e.lower(x, y);
}

EnvelopeResult characterization_extremum(const TwoOrderStructure& s, ExtremumKind kind,
                                         const Element& u, const Element& v, const Window& w) {
  EnvelopeEngine e(borrow(s), w, {.use_hints = true, .dense = false});
  return e.extremum(kind, u, v);
}

Verdict verify_envelope(const TwoOrderStructure& s, ExtremumKind kind, const Element& x,
                        const Element& y, const Element& candidate, const Window& w) {
  EnvelopeEngine e(borrow(s), w, {.use_hints = false, .dense = false});
  return e.verify(kind, x, y, candidate);
}

EnvelopeResult order_supremum(const TwoOrderStructure& s, Which which, const Element& a,
                              const Element& b, const Window& w) {
  EnvelopeEngine e(borrow(s), w, {.use_hints = false, .dense = false});
  return e.supremum(which, a, b);
}

std::optional<std::pair<std::string, Verdict>> verify_hints(const TwoOrderStructure& s,
                                                            const Window& w) {
  if (!s.upper_hint() && !s.lower_hint()) return std::nullopt;
  EnvelopeEngine e(borrow(s), w, {.use_hints = false, .dense = true});
  auto scope = scope_of(s, w);
  for (int side = 0; side < 2; ++side) {
    const bool up = side == 0;
    const EnvelopeHint& hint = up ? s.upper_hint() : s.lower_hint();
    if (!hint) continue;
    const std::string check = up ? "upper hint" : "lower hint";
    for (const Element& x : e.quant())
      for (const Element& y : e.quant()) {
        std::optional<Element> h = hint(x, y);
        EnvelopeResult r = up ? e.brute_upper(x, y) : e.brute_lower(x, y);
        if (h) {
          bool member = s.carrier().contains(*h) &&
                        (up ? (s.sle(x, *h) && s.le(y, *h)) : (s.sle(*h, x) && s.le(*h, y)));
          bool in_box = e.index_of(*h).has_value();
          bool agrees = member;
          if (agrees && r.value && *r.value != *h)
            agrees = !in_box && (up ? s.le(*h, *r.value) : s.le(*r.value, *h));
          if (agrees && !r.value && in_box) agrees = false;
          if (!agrees)
            return std::make_pair(check, Verdict::fails({x, y}, "hint disagrees with search", scope));
        } else if (r.found()) {
          return std::make_pair(check, Verdict::fails({x, y}, "hint misses an envelope", scope));
        }
      }
  }
  return std::nullopt;
}

CrossChecker::CrossChecker(StructurePtr s, Window w) : s_(std::move(s)), w_(std::move(w)) {
  main_ = std::make_unique<EnvelopeEngine>(s_, w_);
  const TwoOrderStructure& g = *s_;
  auto positive = [&](const EnvelopeEngine& eng, Which which) {
    const TwoOrderStructure& t = eng.structure();
    for (const Element& x : eng.quant())
      if (!t.compare(which, t.zero(), x)) return false;
    return true;
  };
  if (g.is_group()) {
    a_ = std::make_shared<TwoOrderStructure>(
        restrict_structure(g, positive_cone(g, Which::Specific), g.name() + "/sp"));
    b_ = std::make_shared<TwoOrderStructure>(
        restrict_structure(g, positive_cone(g, Which::Initial), g.name() + "/p"));
  } else {
    if (check_axiom(g, AxiomId::NatordSleq, w_).is_holds() &&
        check_axiom(g, AxiomId::CancLeq, w_).is_holds())
      a_ = s_;
    if (check_axiom(g, AxiomId::NatordLeq, w_).is_holds() &&
        check_axiom(g, AxiomId::CancSleq, w_).is_holds())
      b_ = s_;
  }
  if (a_) {
    a_eng_ = a_ == s_ ? nullptr : std::make_unique<EnvelopeEngine>(a_, w_);
    a_positive_ = positive(a_eng_ ? *a_eng_ : *main_, Which::Initial);
  }
  if (b_) {
    b_eng_ = b_ == s_ ? nullptr : std::make_unique<EnvelopeEngine>(b_, w_);
    b_positive_ = positive(b_eng_ ? *b_eng_ : *main_, Which::Specific);
  }
}

CrossChecker::~CrossChecker() = default;

namespace {

// Maps an element of the parent to the restricted carrier (labels on finite carriers).
std::optional<Element> carry(const TwoOrderStructure& from, const TwoOrderStructure& to,
                             const Element& e) {
  if (from.carrier().kind() == CarrierKind::Grid)
    return to.carrier().contains(e) ? std::optional<Element>(e) : std::nullopt;
  const std::string& label = from.carrier().labels()[from.carrier().index(e)];
  const auto& labels = to.carrier().labels();
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return to.carrier().element(static_cast<int>(it - labels.begin()));
}

}  // namespace

Verdict CrossChecker::check(const Element& u, const Element& v) {
  auto scope = scope_of(*s_, w_);
  Verdict out = Verdict::holds(scope);
  std::string failed;
  std::size_t decided = 0;
  auto link = [&](const std::string& name, const EnvelopeResult& lhs, bool rhs_found,
                  const std::function<bool()>& agree) {
    if (!failed.empty()) return;
    if (!lhs.found() || !rhs_found) {
      ++out.undecided;
      return;
    }
    ++decided;
    if (!agree()) failed = name;
  };
  const TwoOrderStructure& g = *s_;
  if (g.is_group()) {
    for (ExtremumKind k : {ExtremumKind::MinG, ExtremumKind::MinGDual}) {
      EnvelopeResult m = main_->extremum(k, u, v);
      if (m.link_holds) {
        ++decided;
        if (!*m.link_holds && failed.empty()) failed = extremum_name(k);
      } else {
        ++out.undecided;
      }
    }
  }
  auto side = [&](const StructurePtr& t, EnvelopeEngine* eng_ptr, bool positive, bool a_side) {
    if (!t) return;
    EnvelopeEngine& eng = eng_ptr ? *eng_ptr : *main_;
    auto uu = carry(g, *t, u), vv = carry(g, *t, v);
    if (!uu || !vv) return;
    const TwoOrderStructure& h = *t;
    const Element& x = *uu;
    const Element& y = *vv;
    // A: m + v = v∨u; B: m + v = u∨v
    const EnvelopeResult& env = a_side ? eng.upper(y, x) : eng.upper(x, y);
    EnvelopeResult m = eng.extremum(a_side ? ExtremumKind::MinA : ExtremumKind::MinB, x, y);
    link(a_side ? "MIN-A" : "MIN-B", m, env.found(),
         [&] { return h.add(*m.value, y) == *env.value; });
    if (!positive) return;
    const EnvelopeResult& meet = a_side ? eng.lower(x, y) : eng.lower(y, x);
    EnvelopeResult mc = eng.extremum(
        a_side ? ExtremumKind::MinAConstrained : ExtremumKind::MinBConstrained, x, y);
    link(a_side ? "MIN-A-CONSTRAINED" : "MIN-B-CONSTRAINED", mc, meet.found(),
         [&] { return h.add(*mc.value, *meet.value) == x; });
    EnvelopeResult mw = eng.extremum(a_side ? ExtremumKind::MaxWA : ExtremumKind::MaxWB, x, y);
    link(a_side ? "MAX-W-A" : "MAX-W-B", mw, meet.found(), [&] { return *mw.value == *meet.value; });
  };
  side(a_, a_eng_.get(), a_positive_, true);
  side(b_, b_eng_.get(), b_positive_, false);
  out.checked = decided;
  if (!failed.empty()) {
    Verdict f = Verdict::fails({u, v}, failed, scope);
    f.checked = decided;
    return f;
  }
  if (decided == 0) {
    Verdict unk = Verdict::unknown("no link decidable at this pair", scope);
    unk.undecided = out.undecided;
    return unk;
  }
  return out;
}

Verdict oracle_cross_check(const StructurePtr& s, const Element& u, const Element& v,
                           const Window& w) {
  CrossChecker c(s, w);
  return c.check(u, v);
}

}  // namespace mixlat
