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

// Brute-force reference models for the gallery, written directly from the
// order definitions. Coordinates are integers scaled by the window
// denominator q, so no rational arithmetic is involved.

#ifndef MIXLAT_TESTS_REF_MODELS_HPP
#define MIXLAT_TESTS_REF_MODELS_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mixlat/element.hpp"

namespace ref {

struct Pt {
  std::vector<std::int64_t> c;  // numerators over q
  std::int64_t t = 0;           // Z_2 residue when the model has torsion
  friend bool operator==(const Pt&, const Pt&) = default;
};

enum class Status { Found, Empty, NoLeast };

struct Env {
  Status status = Status::Empty;
  Pt value;
};

struct Model {
  std::string name;
  int rank = 1;
  bool torsion = false;
  std::int64_t q = 1;
  std::int64_t lo = 0, hi = 0;  // window bounds, same on every axis (unscaled)
  std::int64_t pad = 0;         // unscaled padding of the reference box
  std::function<bool(const Pt&)> domain = [](const Pt&) { return true; };
  // Positive sets of <= and ⊑, tested on differences.
  std::function<bool(const Pt&)> pos_le;
  std::function<bool(const Pt&)> pos_sle;

  Pt diff(const Pt& b, const Pt& a) const {
    Pt d;
    for (int i = 0; i < rank; ++i) d.c.push_back(b.c[i] - a.c[i]);
    if (torsion) d.t = ((b.t - a.t) % 2 + 2) % 2;
    return d;
  }
  bool le(const Pt& a, const Pt& b) const { return pos_le(diff(b, a)); }
  bool sle(const Pt& a, const Pt& b) const { return pos_sle(diff(b, a)); }

  std::vector<Pt> grid(std::int64_t widen) const {
    std::vector<Pt> out;
    std::int64_t a = (lo - widen) * q, b = (hi + widen) * q;
    std::vector<std::int64_t> cur(rank, a);
    for (;;) {
      for (int t = 0; t <= (torsion ? 1 : 0); ++t) {
        Pt p{cur, t};
        if (domain(p)) out.push_back(p);
      }
      int i = rank - 1;
      while (i >= 0 && cur[i] == b) cur[i--] = a;
      if (i < 0) break;
      ++cur[i];
    }
    return out;
  }
  std::vector<Pt> window() const { return grid(0); }
  std::vector<Pt> box() const { return grid(pad); }

  // Least (by <=) z with x ⊑ z and y <= z.
  Env upper(const std::vector<Pt>& box, const Pt& x, const Pt& y) const {
    std::vector<const Pt*> d;
    for (const Pt& z : box)
      if (sle(x, z) && le(y, z)) d.push_back(&z);
    return pick(d, true);
  }
  // Greatest (by <=) z with z ⊑ x and z <= y.
  Env lower(const std::vector<Pt>& box, const Pt& x, const Pt& y) const {
    std::vector<const Pt*> d;
    for (const Pt& z : box)
      if (sle(z, x) && le(z, y)) d.push_back(&z);
    return pick(d, false);
  }

  Env pick(const std::vector<const Pt*>& d, bool least) const {
    if (d.empty()) return {Status::Empty, {}};
    // If a least element exists the scan ends on it; the second pass confirms.
    const Pt* cur = d.front();
    for (const Pt* b : d)
      if (least ? le(*b, *cur) : le(*cur, *b)) cur = b;
    for (const Pt* b : d)
      if (least ? !le(*cur, *b) : !le(*b, *cur)) return {Status::NoLeast, {}};
    return {Status::Found, *cur};
  }

  mixlat::Element to_element(const Pt& p) const {
    mixlat::Coords c;
    for (int i = 0; i < rank; ++i) c.push_back(mixlat::Rational(p.c[i], q));
    mixlat::Residues r;
    if (torsion) r.push_back(p.t);
    return {c, r};
  }

  // Deterministic sample of window pairs.
  std::vector<std::pair<Pt, Pt>> pairs(std::size_t n, std::uint64_t seed) const {
    std::vector<Pt> w = window();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_index(0, w.size() - 1);
    std::vector<std::pair<Pt, Pt>> out;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = pick_index(rng);
      std::size_t b = pick_index(rng);
      out.emplace_back(w[a], w[b]);
    }
    return out;
  }
};

inline bool lex(std::int64_t a, std::int64_t b) { return a > 0 || (a == 0 && b >= 0); }

inline std::vector<Model> models() {
  std::vector<Model> m;
  {
    Model x;
    x.name = "nonneg-integers-mod3-cone";
    x.lo = 0, x.hi = 12, x.pad = 18;
    x.domain = [](const Pt& p) { return p.c[0] >= 0; };
    x.pos_le = [](const Pt& d) { return d.c[0] >= 0 && d.c[0] % 3 == 0; };
    x.pos_sle = [](const Pt& d) { return d.c[0] >= 0; };
    m.push_back(x);
  }
  {
    Model x;
    x.name = "halfline-gap-G";
    x.q = 2, x.lo = -8, x.hi = 8, x.pad = 12;
    x.pos_le = [](const Pt& d) { return d.c[0] >= 0; };
    x.pos_sle = [](const Pt& d) { return d.c[0] == 0 || d.c[0] >= 4; };
    m.push_back(x);
  }
  {
    Model x;
    x.name = "halfline-gap-M";
    x.lo = 0, x.hi = 8, x.pad = 12;
    x.domain = [](const Pt& p) { return p.c[0] == 0 || p.c[0] >= 2; };
    x.pos_le = [](const Pt& d) { return d.c[0] >= 0; };
    x.pos_sle = [](const Pt& d) { return d.c[0] == 0 || d.c[0] >= 2; };
    m.push_back(x);
  }
  {
    Model x;
    x.name = "double-lex";
    x.rank = 2, x.lo = -4, x.hi = 4, x.pad = 12;
    x.pos_le = [](const Pt& d) { return lex(d.c[0], d.c[1]); };
    x.pos_sle = [](const Pt& d) { return lex(d.c[1], d.c[0]); };
    m.push_back(x);
  }
  {
    Model x;
    x.name = "r3-two-cones";
    x.rank = 3, x.lo = -1, x.hi = 1, x.pad = 6;
    x.pos_le = [](const Pt& d) { return d.c[1] == 0 && d.c[2] >= std::abs(d.c[0]); };
    x.pos_sle = [](const Pt& d) { return d.c[0] == 0 && d.c[2] >= std::abs(d.c[1]); };
    m.push_back(x);
  }
  {
    Model x;
    x.name = "lex-diagcone";
    x.rank = 2, x.lo = -4, x.hi = 4, x.pad = 14;
    x.pos_le = [](const Pt& d) { return lex(d.c[0], d.c[1]); };
    x.pos_sle = [](const Pt& d) { return d.c[1] >= std::abs(d.c[0]); };
    m.push_back(x);
  }
  {
    Model x;
    x.name = "diag-step";
    x.rank = 2, x.lo = -4, x.hi = 4, x.pad = 14;
    x.pos_le = [](const Pt& d) {
      return (d.c[0] == 0 && d.c[1] == 0) || (d.c[0] == 1 && d.c[1] == 1) ||
             (d.c[0] >= 2 && d.c[1] >= 2);
    };
    x.pos_sle = [](const Pt& d) { return d.c[0] == d.c[1] && d.c[0] >= 0; };
    m.push_back(x);
  }
  {
    Model x;
    x.name = "torsion-z2";
    x.torsion = true, x.lo = -6, x.hi = 6, x.pad = 16;
    x.pos_le = [](const Pt& d) { return d.c[0] > 0 || (d.c[0] == 0 && d.t == 0); };
    x.pos_sle = [](const Pt& d) { return d.c[0] >= 0 && (d.c[0] - d.t) % 2 == 0; };
    m.push_back(x);
  }
  return m;
}

inline Model model(const std::string& name) {
  for (Model& m : models())
    if (m.name == name) return m;
  std::abort();
}

}  // namespace ref

#endif  // MIXLAT_TESTS_REF_MODELS_HPP
