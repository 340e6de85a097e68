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

#include "mixlat/laws.hpp"

#include <algorithm>
#include <array>
#include <span>

#include "mixlat/axioms.hpp"
#include "mixlat/classify.hpp"
#include "mixlat/detail/quantify.hpp"

namespace mixlat {

using detail::quantify;
using detail::TupleOutcome;

namespace {

struct LawInfo {
  LawId id;
  const char* name;
  int arity;
  bool group_only;
  bool scaled;
  const char* formula;
};

const std::array<LawInfo, 24> kLaws = {{
    {LawId::P0, "P0", 2, false, false, "x∧y ⊑ x ⊑ x∨y and x∧y ≤ y ≤ x∨y"},
    {LawId::P4, "P4", 4, false, false, "x ⊑ u and y ≤ v imply x∨y ≤ u∨v and x∧y ≤ u∧v"},
    {LawId::P5B, "P5B", 2, false, false, "x ⊑ y iff x∨y = y iff y∧x = x"},
    {LawId::P1, "P1", 2, true, false, "x∨y + y∧x = x + y"},
    {LawId::P2, "P2", 3, true, false, "z + x∨y = (x+z)∨(y+z) and z + x∧y = (x+z)∧(y+z)"},
    {LawId::P3, "P3", 2, true, false, "−(x∨y) = (−x)∧(−y)"},
    {LawId::R0, "R0", 2, true, false, "x ≤ y iff y∨x = y iff x∧y = x"},
    {LawId::TransUp, "TRANS-UP", 3, false, false, "(u+a)∨(v+a) = u∨v + a"},
    {LawId::TransLow, "TRANS-LOW", 3, false, false, "(u+a)∧(v+a) = u∧v + a"},
    {LawId::PosA, "POS-A", 2, false, false, "v∨u ≤ u + v"},
    {LawId::PosB, "POS-B", 2, false, false, "u∨v ≤ u + v"},
    {LawId::MlsSleq, "MLS-SLEQ", 2, false, false, "v∨u ⊑ u + v"},
    {LawId::WmlsIneq, "WMLS-INEQ", 2, false, false, "v∨u + u∧v ≤ u + v"},
    {LawId::BIneq, "B-INEQ", 2, false, false, "v∨u + u∧v ⊑ u + v"},
    {LawId::QrB, "QR-B", 4, true, false, "u ⊑ x ⊑ z and u ⊑ y ⊑ z imply x∨y ⊑ z and u ⊑ x∧y"},
    {LawId::QrC, "QR-C", 3, true, false, "x ⊑ y implies z∧x ⊑ z∧y and z∨x ⊑ z∨y"},
    {LawId::QrD, "QR-D", 3, true, false,
     "(z∧x)∨(z∧y) ≤ z∧(x∨y) and z∨(x∧y) ≤ (z∨x)∧(z∨y)"},
    {LawId::QrE, "QR-E", 3, true, false, "x∧(y∧z) ≤ (x∧y)∧z and (x∨y)∨z ≤ x∨(y∨z)"},
    {LawId::QrF, "QR-F", 3, true, false,
     "(z∧x)∨(z∧y) ≤ z∧((z∧x)∨y) and (z∨x)∧(z∨y) ≥ z∨((z∨x)∧y)"},
    {LawId::ScaleLow, "SCALE-LOW", 2, true, true, "(nx)∧(ny) = n(x∧y)"},
    {LawId::ScaleUp, "SCALE-UP", 2, true, true, "(nx)∨(ny) = n(x∨y)"},
    {LawId::ScaleZero, "SCALE-ZERO", 2, true, true, "x∧y = 0 implies (mx)∧(ny) = 0"},
    {LawId::DivLeq, "DIV-LEQ", 1, true, true, "nu ≥ 0 implies u ≥ 0"},
    {LawId::DivSleq, "DIV-SLEQ", 1, true, true, "nu ⊒ 0 implies u ⊒ 0"},
}};

const LawInfo& info(LawId id) {
  for (const auto& l : kLaws)
    if (l.id == id) return l;
  throw InternalError("law missing from catalog");
}

// Accumulates the conjuncts of one instance.
struct Parts {
  bool decided = false;
  bool failed = false;
  template <class F>
  void add(bool available, F&& ok) {
    if (failed || !available) return;
    decided = true;
    if (!ok()) failed = true;
  }
  TupleOutcome outcome() const {
    if (failed) return TupleOutcome::Fails;
    return decided ? TupleOutcome::Holds : TupleOutcome::Undecided;
  }
};

// Element-valued operations through the engine.
class ElementAlgebra {
 public:
  using V = Element;
  using Opt = std::optional<Element>;

  explicit ElementAlgebra(EnvelopeEngine& eng) : eng_(eng), s_(eng.structure()) {}

  Opt J(const V& a, const V& b) {
    const EnvelopeResult& r = eng_.upper(a, b);
    return r.found() ? Opt(*r.value) : std::nullopt;
  }
  Opt M(const V& a, const V& b) {
    const EnvelopeResult& r = eng_.lower(a, b);
    return r.found() ? Opt(*r.value) : std::nullopt;
  }
  bool le(const V& a, const V& b) const { return eng_.le(a, b); }
  bool sle(const V& a, const V& b) const { return eng_.sle(a, b); }
  bool cmp(Which w, const V& a, const V& b) const { return eng_.compare(w, a, b); }
  V add(const V& a, const V& b) const { return s_.add(a, b); }
  V neg(const V& a) const { return s_.negate(a); }
  V mul(std::int64_t n, const V& a) const { return s_.carrier().multiple(n, a); }
  V zero() const { return s_.zero(); }

 private:
  EnvelopeEngine& eng_;
  const TwoOrderStructure& s_;
};

struct OutsideBox {};

// Search-box indices with lazily filled operation tables. Any term that
// leaves the box throws OutsideBox; the caller then falls back to elements.
class IndexAlgebra {
 public:
  using V = int;
  using Opt = std::optional<int>;

  explicit IndexAlgebra(EnvelopeEngine& eng)
      : eng_(eng), s_(eng.structure()), n_(static_cast<int>(eng.box().size())) {
    const std::size_t cells = static_cast<std::size_t>(n_) * n_;
    add_.assign(cells, kUnset);
    up_.assign(cells, kUnset);
    lo_.assign(cells, kUnset);
    neg_.assign(n_, kUnset);
    auto z = eng.index_of(s_.zero());
    zero_ = z ? *z : kOutside;
  }

  int of(const Element& e) const {
    auto i = eng_.index_of(e);
    if (!i) throw OutsideBox{};
    return *i;
  }

  Opt J(V a, V b) { return env(up_, true, a, b); }
  Opt M(V a, V b) { return env(lo_, false, a, b); }
  bool le(V a, V b) const { return eng_.rel_at(Which::Initial, a, b); }
  bool sle(V a, V b) const { return eng_.rel_at(Which::Specific, a, b); }
  bool cmp(Which w, V a, V b) const { return eng_.rel_at(w, a, b); }
  V add(V a, V b) {
    int& c = add_[static_cast<std::size_t>(a) * n_ + b];
    if (c == kUnset) c = index_or_outside(s_.add(eng_.box()[a], eng_.box()[b]));
    if (c == kOutside) throw OutsideBox{};
    return c;
  }
  V neg(V a) {
    int& c = neg_[a];
    if (c == kUnset) c = index_or_outside(s_.negate(eng_.box()[a]));
    if (c == kOutside) throw OutsideBox{};
    return c;
  }
  V mul(std::int64_t n, V a) { return of(s_.carrier().multiple(n, eng_.box()[a])); }
  V zero() const {
    if (zero_ == kOutside) throw OutsideBox{};
    return zero_;
  }

 private:
  static constexpr int kUnset = -2;
  static constexpr int kOutside = -3;
  static constexpr int kMissing = -1;

  int index_or_outside(const Element& e) const {
    auto i = eng_.index_of(e);
    return i ? *i : kOutside;
  }

  Opt env(std::vector<int>& table, bool upper, V a, V b) {
    int& c = table[static_cast<std::size_t>(a) * n_ + b];
    if (c == kUnset) {
      const Element& x = eng_.box()[a];
      const Element& y = eng_.box()[b];
      const EnvelopeResult& r = upper ? eng_.upper(x, y) : eng_.lower(x, y);
      c = r.found() ? index_or_outside(*r.value) : kMissing;
    }
    if (c == kOutside) throw OutsideBox{};
    if (c == kMissing) return std::nullopt;
    return c;
  }

  EnvelopeEngine& eng_;
  const TwoOrderStructure& s_;
  int n_;
  int zero_;
  std::vector<int> add_, up_, lo_, neg_;
};

template <class A>
typename A::Opt J(A& a, const typename A::Opt& x, const typename A::Opt& y) {
  return x && y ? a.J(*x, *y) : std::nullopt;
}
template <class A>
typename A::Opt M(A& a, const typename A::Opt& x, const typename A::Opt& y) {
  return x && y ? a.M(*x, *y) : std::nullopt;
}

template <class A>
TupleOutcome eval_law(A& al, LawId law, std::span<const typename A::V> t, std::int64_t n, std::int64_t m) {
  using Opt = typename A::Opt;
  Parts p;
  switch (law) {
    case LawId::P0: {
      const auto &x = t[0], &y = t[1];
      Opt j = al.J(x, y), k = al.M(x, y);
      p.add(j && k, [&] { return al.sle(*k, x) && al.sle(x, *j) && al.le(*k, y) && al.le(y, *j); });
      break;
    }
    case LawId::P4: {
      const auto &x = t[0], &y = t[1], &u = t[2], &v = t[3];
      if (!(al.sle(x, u) && al.le(y, v))) return TupleOutcome::Holds;
      Opt a = al.J(x, y);
      Opt b = a ? al.J(u, v) : std::nullopt;
      p.add(a && b, [&] { return al.le(*a, *b); });
      Opt c = al.M(x, y);
      Opt d = c ? al.M(u, v) : std::nullopt;
      p.add(c && d, [&] { return al.le(*c, *d); });
      break;
    }
    case LawId::P5B: {
      const auto &x = t[0], &y = t[1];
      Opt j = al.J(x, y), k = al.M(y, x);
      p.add(j && k, [&] {
        bool a = al.sle(x, y), b = *j == y, c = *k == x;
        return a == b && b == c;
      });
      break;
    }
    case LawId::P1: {
      const auto &x = t[0], &y = t[1];
      Opt j = al.J(x, y), k = al.M(y, x);
      p.add(j && k, [&] { return al.add(*j, *k) == al.add(x, y); });
      break;
    }
    case LawId::P2: {
      const auto &x = t[0], &y = t[1], &z = t[2];
      Opt j = al.J(x, y);
      Opt j2 = j ? al.J(al.add(x, z), al.add(y, z)) : std::nullopt;
      p.add(j && j2, [&] { return al.add(z, *j) == *j2; });
      Opt k = al.M(x, y);
      Opt k2 = k ? al.M(al.add(x, z), al.add(y, z)) : std::nullopt;
      p.add(k && k2, [&] { return al.add(z, *k) == *k2; });
      break;
    }
    case LawId::P3: {
      const auto &x = t[0], &y = t[1];
      Opt j = al.J(x, y);
      Opt k = j ? al.M(al.neg(x), al.neg(y)) : std::nullopt;
      p.add(j && k, [&] { return al.neg(*j) == *k; });
      break;
    }
    case LawId::R0: {
      const auto &x = t[0], &y = t[1];
      Opt j = al.J(y, x), k = al.M(x, y);
      p.add(j && k, [&] {
        bool a = al.le(x, y), b = *j == y, c = *k == x;
        return a == b && b == c;
      });
      break;
    }
    case LawId::TransUp:
    case LawId::TransLow: {
      const auto &u = t[0], &v = t[1], &a = t[2];
      bool up = law == LawId::TransUp;
      Opt base = up ? al.J(u, v) : al.M(u, v);
      Opt moved = std::nullopt;
      if (base) moved = up ? al.J(al.add(u, a), al.add(v, a)) : al.M(al.add(u, a), al.add(v, a));
      p.add(base && moved, [&] { return *moved == al.add(*base, a); });
      break;
    }
    case LawId::PosA:
    case LawId::PosB:
    case LawId::MlsSleq: {
      const auto &u = t[0], &v = t[1];
      Opt j = law == LawId::PosB ? al.J(u, v) : al.J(v, u);
      p.add(j.has_value(), [&] {
        auto sum = al.add(u, v);
        return law == LawId::MlsSleq ? al.sle(*j, sum) : al.le(*j, sum);
      });
      break;
    }
    case LawId::WmlsIneq:
    case LawId::BIneq: {
      const auto &u = t[0], &v = t[1];
      Opt j = al.J(v, u);
      Opt k = j ? al.M(u, v) : std::nullopt;
      p.add(j && k, [&] {
        auto lhs = al.add(*j, *k);
        auto sum = al.add(u, v);
        return law == LawId::WmlsIneq ? al.le(lhs, sum) : al.sle(lhs, sum);
      });
      break;
    }
    case LawId::QrB: {
      const auto &u = t[0], &x = t[1], &y = t[2], &z = t[3];
      if (!(al.sle(u, x) && al.sle(x, z) && al.sle(u, y) && al.sle(y, z))) return TupleOutcome::Holds;
      Opt j = al.J(x, y);
      p.add(j.has_value(), [&] { return al.sle(*j, z); });
      Opt k = al.M(x, y);
      p.add(k.has_value(), [&] { return al.sle(u, *k); });
      break;
    }
    case LawId::QrC: {
      const auto &x = t[0], &y = t[1], &z = t[2];
      if (!al.sle(x, y)) return TupleOutcome::Holds;
      Opt a = al.M(z, x);
      Opt b = a ? al.M(z, y) : std::nullopt;
      p.add(a && b, [&] { return al.sle(*a, *b); });
      Opt c = al.J(z, x);
      Opt d = c ? al.J(z, y) : std::nullopt;
      p.add(c && d, [&] { return al.sle(*c, *d); });
      break;
    }
    case LawId::QrD: {
      const auto &x = t[0], &y = t[1], &z = t[2];
      const Opt zo(z);
      Opt lhs = J(al, al.M(z, x), al.M(z, y));
      Opt rhs = lhs ? M(al, zo, al.J(x, y)) : std::nullopt;
      p.add(lhs && rhs, [&] { return al.le(*lhs, *rhs); });
      Opt lhs2 = J(al, zo, al.M(x, y));
      Opt rhs2 = lhs2 ? M(al, al.J(z, x), al.J(z, y)) : std::nullopt;
      p.add(lhs2 && rhs2, [&] { return al.le(*lhs2, *rhs2); });
      break;
    }
    case LawId::QrE: {
      const auto &x = t[0], &y = t[1], &z = t[2];
      const Opt xo(x), zo(z);
      Opt lhs = M(al, xo, al.M(y, z));
      Opt rhs = lhs ? M(al, al.M(x, y), zo) : std::nullopt;
      p.add(lhs && rhs, [&] { return al.le(*lhs, *rhs); });
      Opt lhs2 = J(al, al.J(x, y), zo);
      Opt rhs2 = lhs2 ? J(al, xo, al.J(y, z)) : std::nullopt;
      p.add(lhs2 && rhs2, [&] { return al.le(*lhs2, *rhs2); });
      break;
    }
    case LawId::QrF: {
      const auto &x = t[0], &y = t[1], &z = t[2];
      const Opt yo(y), zo(z);
      Opt zx = al.M(z, x);
      Opt lhs = J(al, zx, al.M(z, y));
      Opt rhs = lhs ? M(al, zo, J(al, zx, yo)) : std::nullopt;
      p.add(lhs && rhs, [&] { return al.le(*lhs, *rhs); });
      Opt zx2 = al.J(z, x);
      Opt lhs2 = M(al, zx2, al.J(z, y));
      Opt rhs2 = lhs2 ? J(al, zo, M(al, zx2, yo)) : std::nullopt;
      p.add(lhs2 && rhs2, [&] { return al.le(*rhs2, *lhs2); });
      break;
    }
    case LawId::ScaleLow:
    case LawId::ScaleUp: {
      const auto &x = t[0], &y = t[1];
      bool up = law == LawId::ScaleUp;
      Opt base = up ? al.J(x, y) : al.M(x, y);
      Opt scaled = std::nullopt;
      if (base) scaled = up ? al.J(al.mul(n, x), al.mul(n, y)) : al.M(al.mul(n, x), al.mul(n, y));
      p.add(base && scaled, [&] { return *scaled == al.mul(n, *base); });
      break;
    }
    case LawId::ScaleZero: {
      const auto &x = t[0], &y = t[1];
      Opt base = al.M(x, y);
      if (base && !(*base == al.zero())) return TupleOutcome::Holds;
      Opt scaled = base ? al.M(al.mul(m, x), al.mul(n, y)) : std::nullopt;
      p.add(base && scaled, [&] { return *scaled == al.zero(); });
      break;
    }
    case LawId::DivLeq:
    case LawId::DivSleq: {
      const auto& u = t[0];
      Which w = law == LawId::DivLeq ? Which::Initial : Which::Specific;
      if (!al.cmp(w, al.zero(), al.mul(n, u))) return TupleOutcome::Holds;
      return al.cmp(w, al.zero(), u) ? TupleOutcome::Holds : TupleOutcome::Fails;
    }
  }
  return p.outcome();
}

// Evaluates on box indices when possible, else on elements.
class Evaluator {
 public:
  explicit Evaluator(EnvelopeEngine& eng) : eng_(eng), elem_(eng), idx_(eng) {
    for (const Element& q : eng.quant()) {
      auto i = eng.index_of(q);
      qbox_.push_back(i ? *i : -1);
    }
  }

  // `idx` are positions in the engine's quantification list.
  TupleOutcome at(LawId law, std::span<const int> idx, std::int64_t n, std::int64_t m) {
    std::array<int, 4> boxed{};
    bool inside = true;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      boxed[i] = qbox_[idx[i]];
      inside = inside && boxed[i] >= 0;
    }
    if (inside) {
      try {
        return eval_law(idx_, law, std::span<const int>(boxed.data(), idx.size()), n, m);
      } catch (const OutsideBox&) {
      }
    }
    std::vector<Element> els;
    for (int i : idx) els.push_back(eng_.quant()[i]);
    return eval_law(elem_, law, std::span<const Element>(els), n, m);
  }

  TupleOutcome on(LawId law, const std::vector<Element>& tuple, std::int64_t n, std::int64_t m) {
    return eval_law(elem_, law, std::span<const Element>(tuple), n, m);
  }

 private:
  EnvelopeEngine& eng_;
  ElementAlgebra elem_;
  IndexAlgebra idx_;
  std::vector<int> qbox_;
};

}  // namespace

std::string law_name(LawId id) { return info(id).name; }

std::optional<LawId> parse_law(std::string_view text) {
  for (const auto& l : kLaws)
    if (text == l.name) return l.id;
  return std::nullopt;
}

const std::vector<LawId>& all_laws() {
  static const std::vector<LawId> ids = [] {
    std::vector<LawId> v;
    for (const auto& l : kLaws) v.push_back(l.id);
    return v;
  }();
  return ids;
}

int law_arity(LawId id) { return info(id).arity; }
bool law_group_only(LawId id) { return info(id).group_only; }
bool law_scaled(LawId id) { return info(id).scaled; }
std::string law_formula(LawId id) { return info(id).formula; }

Verdict check_law(EnvelopeEngine& eng, LawId law, int nmax) {
  const TwoOrderStructure& s = eng.structure();
  if (law_group_only(law) && !s.is_group())
    return Verdict::unsupported_op(law_name(law) + " needs a group");
  if (nmax < 1) throw UsageError("nmax must be positive");
  auto scope = scope_of(s, eng.window());
  Evaluator ev(eng);
  const int k = law_arity(law);
  if (!law_scaled(law)) {
    return quantify(eng.quant(), k, scope, false,
                    [&](std::span<const int> idx, Verdict&) { return ev.at(law, idx, 1, 1); });
  }
  const bool two = law == LawId::ScaleZero;
  return quantify(eng.quant(), k, scope, false, [&](std::span<const int> idx, Verdict& out) {
    bool undecided = false;
    for (std::int64_t n = 1; n <= nmax; ++n)
      for (std::int64_t m = 1; m <= (two ? nmax : 1); ++m) {
        TupleOutcome o = ev.at(law, idx, n, m);
        if (o == TupleOutcome::Fails) {
          out.multipliers = two ? std::vector<std::int64_t>{n, m} : std::vector<std::int64_t>{n};
          return o;
        }
        if (o == TupleOutcome::Undecided) undecided = true;
      }
    return undecided ? TupleOutcome::Undecided : TupleOutcome::Holds;
  });
}

Verdict check_law(const StructurePtr& s, LawId law, const Window& w, int nmax) {
  EnvelopeEngine eng(s, w);
  return check_law(eng, law, nmax);
}

Outcome evaluate_law_at(EnvelopeEngine& eng, LawId law, const std::vector<Element>& tuple, std::int64_t n,
                        std::int64_t m) {
  if (static_cast<int>(tuple.size()) != law_arity(law))
    throw UsageError(law_name(law) + " takes " + std::to_string(law_arity(law)) + " elements");
  if (law_group_only(law) && !eng.structure().is_group())
    throw UnsupportedOperation(law_name(law) + " needs a group");
  Evaluator ev(eng);
  switch (ev.on(law, tuple, n, m)) {
    case TupleOutcome::Holds: return Outcome::Holds;
    case TupleOutcome::Fails: return Outcome::Fails;
    case TupleOutcome::Undecided: return Outcome::Unknown;
  }
  return Outcome::Unknown;
}

Verdict check_archimedean(EnvelopeEngine& eng, Which which, int nmax) {
  const TwoOrderStructure& s = eng.structure();
  if (!s.is_group()) return Verdict::unsupported_op("Archimedean property needs a group");
  auto scope = scope_of(s, eng.window());
  const Element zero = s.zero();
  auto bounded = [&](const Element& x, const Element& y) {
    if (s.compare(which, x, zero)) return false;
    for (std::int64_t n = 1; n <= nmax; ++n)
      if (!s.compare(which, s.carrier().multiple(n, x), y)) return false;
    return true;
  };
  const auto& q = eng.quant();
  Verdict v = quantify(q, 2, scope, true, [&](std::span<const int> idx, Verdict&) {
    return bounded(q[idx[0]], q[idx[1]]) ? TupleOutcome::Fails : TupleOutcome::Holds;
  });
  if (!v.is_fails()) return v;
  const auto& fact = s.facts().archimedean_violation[which == Which::Initial ? 0 : 1];
  if (fact) {
    if (!bounded(fact->first, fact->second))
      throw InternalError(s.name() + ": recorded Archimedean violation does not satisfy the bounded premise");
    Verdict f = Verdict::fails({fact->first, fact->second}, s.facts().archimedean_proof[which == Which::Initial ? 0 : 1],
                               scope);
    f.checked = v.checked;
    return f;
  }
  Verdict u = Verdict::unknown("bounded candidate for n <= " + std::to_string(nmax), scope);
  u.witness = v.witness;
  u.checked = v.checked;
  return u;
}

std::vector<std::pair<Element, int>> finite_order_elements(const TwoOrderStructure& s, const Window& w,
                                                           int kmax) {
  std::vector<std::pair<Element, int>> out;
  const Element zero = s.zero();
  for (const Element& x : enumerate_window(s, w)) {
    if (x == zero) continue;
    Element acc = x;
    for (int k = 2; k <= kmax; ++k) {
      acc = s.add(acc, x);
      if (acc == zero) {
        out.emplace_back(x, k);
        break;
      }
    }
  }
  return out;
}

std::pair<Element, Element> abs_asym(EnvelopeEngine& eng, const Element& x) {
  const TwoOrderStructure& s = eng.structure();
  if (!s.is_group()) throw UnsupportedOperation("absolute values need a group");
  const Element zero = s.zero();
  const Element nx = s.negate(x);
  auto need = [&](const EnvelopeResult& r, const std::string& what) {
    if (!r.found()) throw EnvelopeUnresolved(what + " at " + s.format(x) + ": " + certificate_text(r.cert));
    return *r.value;
  };
  Element ul = s.add(need(eng.upper(x, zero), "x∨0"), need(eng.upper(zero, nx), "0∨(−x)"));
  Element lu = s.add(need(eng.upper(zero, x), "0∨x"), need(eng.upper(nx, zero), "(−x)∨0"));
  if (x == zero && (ul != zero || lu != zero)) throw InternalError("absolute value of 0 is not 0");
  return {ul, lu};
}

Element HomomorphismSpec::apply(const Element& x) const {
  const Carrier& out = codomain->carrier();
  const std::size_t in_free = x.coords.size();
  std::vector<Rational> in;
  for (const auto& c : x.coords) in.push_back(c);
  for (auto t : x.tors) in.push_back(Rational(t));
  if (matrix.size() != out.rank() + out.moduli().size())
    throw UsageError("map has " + std::to_string(matrix.size()) + " rows, codomain needs " +
                     std::to_string(out.rank() + out.moduli().size()));
  Element y = out.zero();
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    if (matrix[r].size() != in.size()) throw UsageError("map row has the wrong number of columns");
    Rational acc = 0;
    for (std::size_t c = 0; c < in.size(); ++c) acc += Rational(matrix[r][c]) * in[c];
    if (r < out.rank()) {
      y.coords[r] = acc;
    } else {
      if (!is_integer(acc)) throw UsageError("torsion image is not an integer");
      std::int64_t m = out.moduli()[r - out.rank()];
      y.tors[r - out.rank()] = ((acc.numerator() % m) + m) % m;
    }
  }
  (void)in_free;
  return y;
}

HomomorphismReport check_homomorphism(const HomomorphismSpec& t, const Window& w) {
  HomomorphismReport rep;
  EnvelopeEngine dom(t.domain, w);
  EnvelopeEngine cod(t.codomain, t.codomain->default_window());
  const TwoOrderStructure& a = *t.domain;
  const TwoOrderStructure& b = *t.codomain;
  auto scope = scope_of(a, w);
  const auto& q = dom.quant();
  rep.additive = quantify(q, 2, scope, true, [&](std::span<const int> idx, Verdict& out) {
    const Element &x = q[idx[0]], &y = q[idx[1]];
    if (t.apply(a.add(x, y)) == b.add(t.apply(x), t.apply(y))) return TupleOutcome::Holds;
    out.note = "T(x+y) ≠ Tx + Ty";
    return TupleOutcome::Fails;
  });
  if (!rep.additive.is_holds()) {
    rep.hom = rep.abs_lu = rep.abs_ul = Verdict::unknown("map is not additive on the window", scope);
    rep.agree = true;
    return rep;
  }
  rep.hom = quantify(q, 2, scope, false, [&](std::span<const int> idx, Verdict& out) {
    const Element &x = q[idx[0]], &y = q[idx[1]];
    Parts p;
    for (bool up : {true, false}) {
      const EnvelopeResult& l = up ? dom.upper(x, y) : dom.lower(x, y);
      const EnvelopeResult& r = up ? cod.upper(t.apply(x), t.apply(y)) : cod.lower(t.apply(x), t.apply(y));
      p.add(l.found() && r.found(), [&] { return t.apply(*l.value) == *r.value; });
      if (p.failed) {
        out.note = up ? "T(x∨y) ≠ Tx∨Ty" : "T(x∧y) ≠ Tx∧Ty";
        break;
      }
    }
    return p.outcome();
  });
  auto abs_check = [&](bool lu) {
    return quantify(q, 1, scope, false, [&](std::span<const int> idx, Verdict& out) {
      const Element& x = q[idx[0]];
      try {
        auto [ul1, lu1] = abs_asym(dom, x);
        auto [ul2, lu2] = abs_asym(cod, t.apply(x));
        bool ok = lu ? t.apply(lu1) == lu2 : t.apply(ul1) == ul2;
        if (!ok) out.note = lu ? "T⌞x⌟ ≠ ⌞Tx⌟" : "T⌜x⌝ ≠ ⌜Tx⌝";
        return ok ? TupleOutcome::Holds : TupleOutcome::Fails;
      } catch (const EnvelopeUnresolved&) {
        return TupleOutcome::Undecided;
      }
    });
  };
  if (a.is_group() && b.is_group()) {
    rep.abs_lu = abs_check(true);
    rep.abs_ul = abs_check(false);
  } else {
    rep.abs_lu = rep.abs_ul = Verdict::unsupported_op("absolute values need groups");
  }
  rep.agree = rep.hom.outcome == rep.abs_lu.outcome && rep.hom.outcome == rep.abs_ul.outcome;
  return rep;
}

StructurePtr group_of_differences(const StructurePtr& u, const Window& w) {
  const TwoOrderStructure& s = *u;
  for (AxiomId id : {AxiomId::CancLeq, AxiomId::CancSleq}) {
    Verdict v = check_axiom(s, id, w);
    if (v.is_fails())
      throw UnsupportedOperation("group of differences needs cancellation; " + axiom_name(id) + " fails at " +
                                 format_witness(s.carrier(), v.witness));
  }
  const Carrier& c = s.carrier();
  if (c.kind() == CarrierKind::Finite) {
    // a finite cancellative monoid is already a group
    Carrier g = Carrier::finite(c.labels(), c.table(), true);
    auto table = [&](Which which) {
      std::vector<std::vector<bool>> m(c.size(), std::vector<bool>(c.size()));
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
          m[i][j] = s.compare(which, c.element(static_cast<int>(i)), c.element(static_cast<int>(j)));
      return m;
    };
    TwoOrderStructure out(s.name() + "-diff", g, OrderRelation::table(table(Which::Initial)),
                          OrderRelation::table(table(Which::Specific)), Window{});
    return finalize_structure(std::move(out));
  }
  // Window of differences: [lo - hi, hi - lo] per coordinate.
  Window dw = w;
  for (auto& [lo, hi] : dw.bounds) {
    Rational span = hi - lo;
    lo = -span;
    hi = span;
  }
  Carrier ambient = Carrier::grid(c.rank(), c.moduli(), c.integral(), true);
  std::vector<Element> box = enumerate_search_box(c, w);
  auto representable = [c, box](const Element& x) {
    for (const Element& v : box)
      if (c.contains(c.add(x, v))) return true;
    return false;
  };
  bool everything = true;
  for (const Element& x : enumerate_window(ambient, dw))
    if (!representable(x)) {
      everything = false;
      break;
    }
  Carrier g = everything ? ambient : ambient.with_extra_domain(representable, "S − S for " + s.name());
  TwoOrderStructure out(s.name() + "-diff", g, s.initial(), s.specific(), dw);
  return finalize_structure(std::move(out));
}

Extension extend_specific_order(const StructurePtr& u, const StructurePtr& target, const Window& w) {
  const TwoOrderStructure& U = *u;
  const TwoOrderStructure& T = *target;
  if (U.carrier().kind() != CarrierKind::Grid || T.carrier().kind() != CarrierKind::Grid)
    throw UnsupportedOperation("order extension is implemented for grid carriers");
  if (U.carrier().has_extra_domain()) throw UnsupportedOperation("U needs a clause-defined domain");
  if (U.carrier().rank() != T.carrier().rank() || U.carrier().moduli() != T.carrier().moduli())
    throw UsageError("U and the target carrier have different signatures");
  Extension ext;
  auto scope = scope_of(T, w);
  // preconditions
  ClassificationReport ur = classify_structure(u, w);
  const Verdict& pos = ur.at(ClassId::PositiveA);
  Verdict nat = check_axiom(T, AxiomId::NatordLeq, w);
  Verdict canc = check_axiom(T, AxiomId::CancLeq, w);
  ext.preconditions = Verdict::holds(scope);
  const std::pair<const Verdict*, const char*> pre[] = {{&pos, "POSITIVE-A on U"}, {&nat, "NATORD-LEQ"},
                                                       {&canc, "CANC-LEQ"}};
  for (const auto& [v, name] : pre) {
    if (!v->is_holds()) {
      ext.preconditions = *v;
      ext.preconditions.note = name;
      ext.flagged = true;
      break;
    }
  }
  PositiveSet p = U.carrier().domain();
  TwoOrderStructure out(T.name() + "+" + U.name(), T.carrier(), T.initial(), OrderRelation::positive(p), w);
  ext.structure = std::make_shared<TwoOrderStructure>(std::move(out));
  EnvelopeEngine eng(ext.structure, w);
  // domination: every z has some w in U with z ⊑ w
  std::vector<Element> in_u;
  for (const Element& z : eng.box())
    if (U.carrier().contains(z)) in_u.push_back(z);
  ext.domination = quantify(eng.quant(), 1, scope, true, [&](std::span<const int> idx, Verdict& o) {
    const Element& z = eng.quant()[idx[0]];
    for (const Element& x : in_u)
      if (ext.structure->sle(z, x)) return TupleOutcome::Holds;
    o.note = "no dominating element of U in the search box";
    return TupleOutcome::Undecided;
  });
  if (!ext.domination.is_holds()) ext.flagged = true;
  ClassificationReport er = classify_structure(eng);
  ext.b_structure = er.at(ClassId::BStructure);
  return ext;
}

}  // namespace mixlat
