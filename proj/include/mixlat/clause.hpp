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

#ifndef MIXLAT_CLAUSE_HPP
#define MIXLAT_CLAUSE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mixlat/element.hpp"

namespace mixlat {

/// Variable of a clause: free coordinate x<i+1> or torsion residue t<i+1>.
struct Var {
  bool torsion = false;
  int index = 0;
  friend bool operator==(const Var&, const Var&) = default;
};

struct LinTerm {
  Rational coef;
  Var var;
};

enum class Rel { Ge, Gt, Le, Lt, Eq };

enum class AtomKind { Lin, Eq, Mod, Points, All };

/// One constraint. `Lin` and `Eq` compare sum(coef*var) against `rhs`;
/// `Mod` requires the (integer) sum to be congruent to `residue`;
/// `Points` is a finite list; `All` is always true.
struct Atom {
  AtomKind kind = AtomKind::All;
  std::vector<LinTerm> terms;
  Rel rel = Rel::Ge;
  Rational rhs;
  std::int64_t residue = 0;
  std::int64_t modulus = 1;
  std::vector<Element> points;

  bool holds(const Element& e) const;
};

/// Conjunction of atoms.
struct Clause {
  std::vector<Atom> atoms;
  bool holds(const Element& e) const;
};

/// Disjunction of clauses. An empty set contains nothing.
class PositiveSet {
 public:
  PositiveSet() = default;
  explicit PositiveSet(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {}

  static PositiveSet everything();
  static PositiveSet of_points(std::vector<Element> pts);

  bool contains(const Element& e) const;
  const std::vector<Clause>& clauses() const { return clauses_; }
  bool is_everything() const;

  /// DNF product of two sets.
  PositiveSet intersect(const PositiveSet& other) const;

 private:
  std::vector<Clause> clauses_;
};

std::string format_atom(const Atom& a, const std::function<std::string(const Element&)>& fmt);
/// Canonical text, atoms and clauses sorted so the output is order independent.
std::string format_positive_set(const PositiveSet& p,
                                const std::function<std::string(const Element&)>& fmt);

}  // namespace mixlat

#endif  // MIXLAT_CLAUSE_HPP
