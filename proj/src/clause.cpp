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

#include "mixlat/clause.hpp"

#include <algorithm>
#include <numeric>

namespace mixlat {
namespace {

Rational value_of(const Var& v, const Element& e) {
  if (v.torsion) {
    if (v.index >= static_cast<int>(e.tors.size())) return Rational(0);
    return Rational(e.tors[v.index]);
  }
  if (v.index >= static_cast<int>(e.coords.size())) return Rational(0);
  return e.coords[v.index];
}

// Integer fast path: all involved values and coefficients integral.
bool eval_int(const std::vector<LinTerm>& terms, const Element& e, std::int64_t& out) {
  std::int64_t s = 0;
  for (const auto& t : terms) {
    if (t.coef.denominator() != 1) return false;
    std::int64_t x;
    if (t.var.torsion) {
      x = t.var.index < static_cast<int>(e.tors.size()) ? e.tors[t.var.index] : 0;
    } else {
      if (t.var.index >= static_cast<int>(e.coords.size())) {
        x = 0;
      } else {
        const Rational& c = e.coords[t.var.index];
        if (c.denominator() != 1) return false;
        x = c.numerator();
      }
    }
    s += t.coef.numerator() * x;
  }
  out = s;
  return true;
}

Rational eval(const std::vector<LinTerm>& terms, const Element& e) {
  Rational s(0);
  for (const auto& t : terms) s += t.coef * value_of(t.var, e);
  return s;
}

template <class T>
bool compare(const T& lhs, Rel rel, const T& rhs) {
  switch (rel) {
    case Rel::Ge: return !(lhs < rhs);
    case Rel::Gt: return rhs < lhs;
    case Rel::Le: return !(rhs < lhs);
    case Rel::Lt: return lhs < rhs;
    case Rel::Eq: return lhs == rhs;
  }
  return false;
}

std::string var_name(const Var& v) {
  return std::string(v.torsion ? "t" : "x") + std::to_string(v.index + 1);
}

std::string format_terms(const std::vector<LinTerm>& terms) {
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    }
    if (c != 1) out += to_string(c) + "*";
    out += var_name(t.var);
    first = false;
  }
  if (first) out = "0";
  return out;
}

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
    case Rel::Le: return "<=";
    case Rel::Lt: return "<";
    case Rel::Eq: return "=";
  }
  return "?";
}

}  // namespace

bool Atom::holds(const Element& e) const {
  switch (kind) {
    case AtomKind::All:
      return true;
    case AtomKind::Points:
      return std::find(points.begin(), points.end(), e) != points.end();
    case AtomKind::Lin:
    case AtomKind::Eq: {
      std::int64_t s;
      if (rhs.denominator() == 1 && eval_int(terms, e, s))
        return compare(s, rel, rhs.numerator());
      return compare(eval(terms, e), rel, rhs);
    }
    case AtomKind::Mod: {
      std::int64_t s;
      if (!eval_int(terms, e, s)) {
        Rational r = eval(terms, e);
        if (r.denominator() != 1) return false;
        s = r.numerator();
      }
      std::int64_t m = ((s - residue) % modulus + modulus) % modulus;
      return m == 0;
    }
  }
  return false;
}

bool Clause::holds(const Element& e) const {
  for (const auto& a : atoms)
    if (!a.holds(e)) return false;
  return true;
}

PositiveSet PositiveSet::everything() {
  Clause c;
  c.atoms.push_back(Atom{});
  return PositiveSet({c});
}

PositiveSet PositiveSet::of_points(std::vector<Element> pts) {
  Atom a;
  a.kind = AtomKind::Points;
  std::sort(pts.begin(), pts.end());
  a.points = std::move(pts);
  Clause c;
  c.atoms.push_back(std::move(a));
  return PositiveSet({c});
}

bool PositiveSet::contains(const Element& e) const {
  for (const auto& c : clauses_)
    if (c.holds(e)) return true;
  return false;
}

bool PositiveSet::is_everything() const {
  for (const auto& c : clauses_) {
    bool all = true;
    for (const auto& a : c.atoms)
      if (a.kind != AtomKind::All) all = false;
    if (all) return true;
  }
  return false;
}

PositiveSet PositiveSet::intersect(const PositiveSet& other) const {
  if (is_everything()) return other;
  if (other.is_everything()) return *this;
  std::vector<Clause> out;
  for (const auto& a : clauses_)
    for (const auto& b : other.clauses_) {
      Clause c = a;
      c.atoms.insert(c.atoms.end(), b.atoms.begin(), b.atoms.end());
      out.push_back(std::move(c));
    }
  return PositiveSet(std::move(out));
}

std::string format_atom(const Atom& a, const std::function<std::string(const Element&)>& fmt) {
  switch (a.kind) {
    case AtomKind::All:
      return "all";
    case AtomKind::Points: {
      std::string out = "points: ";
      for (std::size_t i = 0; i < a.points.size(); ++i) {
        if (i) out += ",";
        std::string p = fmt(a.points[i]);
        out += (p.front() == '(') ? p : "(" + p + ")";
      }
      return out;
    }
    case AtomKind::Lin:
      return "lin: " + format_terms(a.terms) + " " + rel_text(a.rel) + " " + to_string(a.rhs);
    case AtomKind::Eq:
      return "eq: " + format_terms(a.terms) + " = " + to_string(a.rhs);
    case AtomKind::Mod:
      return "mod: " + format_terms(a.terms) + " = " + std::to_string(a.residue) +
             " (mod " + std::to_string(a.modulus) + ")";
  }
  return "";
}

std::string format_positive_set(const PositiveSet& p,
                                const std::function<std::string(const Element&)>& fmt) {
  std::vector<std::string> clauses;
  for (const auto& c : p.clauses()) {
    std::vector<std::string> atoms;
    for (const auto& a : c.atoms) atoms.push_back(format_atom(a, fmt));
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    std::string s;
    for (std::size_t i = 0; i < atoms.size(); ++i) s += (i ? " & " : "") + atoms[i];
    clauses.push_back(s);
  }
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) out += (i ? " | " : "") + clauses[i];
  return out;
}

}  // namespace mixlat
