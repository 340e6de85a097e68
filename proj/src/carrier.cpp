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

#include "mixlat/carrier.hpp"

#include <algorithm>

#include "mixlat/errors.hpp"

namespace mixlat {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Carrier Carrier::grid(std::size_t rank, std::vector<std::int64_t> moduli, bool integral,
                      bool negation, PositiveSet domain) {
  for (auto m : moduli)
    if (m < 1) throw Error("torsion modulus must be positive");
  if (negation && !domain.is_everything())
    throw Error("negation requires an unrestricted grid domain");
  Carrier c;
  c.kind_ = CarrierKind::Grid;
  c.rank_ = rank;
  c.moduli_ = std::move(moduli);
  c.integral_ = integral;
  c.negation_ = negation;
  c.domain_ = std::move(domain);
  return c;
}

Carrier Carrier::finite(std::vector<std::string> labels, std::vector<std::vector<int>> table,
                        bool negation) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw Error("finite carrier needs at least one element");
  if (static_cast<int>(table.size()) != n) throw Error("addition table is not square");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error("addition table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error("addition table entry out of range");
  }
  Carrier c;
  c.kind_ = CarrierKind::Finite;
  c.labels_ = std::move(labels);
  c.table_ = std::move(table);
  c.zero_index_ = -1;
  for (int e = 0; e < n && c.zero_index_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = c.table_[e][x] == x && c.table_[x][e] == x;
    if (ok) c.zero_index_ = e;
  }
  if (c.zero_index_ < 0) throw Error("addition table has no neutral element");
  c.inverse_.assign(n, -1);
  bool group = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (c.table_[x][y] == c.zero_index_) {
        c.inverse_[x] = y;
        break;
      }
    if (c.inverse_[x] < 0) group = false;
  }
  if (negation && !group) throw Error("negation requested but some element has no inverse");
  c.negation_ = negation;
  c.rank_ = 0;
  return c;
}

Carrier Carrier::with_extra_domain(Predicate p, std::string description) const {
  Carrier c = *this;
  c.extra_ = std::make_shared<Predicate>(std::move(p));
  c.extra_text_ = std::move(description);
  return c;
}

Carrier Carrier::with_domain(PositiveSet domain, bool negation) const {
  Carrier c = *this;
  c.domain_ = std::move(domain);
  c.negation_ = negation;
  return c;
}

int Carrier::index(const Element& e) const {
  if (kind_ != CarrierKind::Finite || e.coords.size() != 1 || !e.tors.empty())
    return -1;
  const Rational& r = e.coords[0];
  if (r.denominator() != 1 || r.numerator() < 0 ||
      r.numerator() >= static_cast<std::int64_t>(labels_.size()))
    return -1;
  return static_cast<int>(r.numerator());
}

Element Carrier::element(int idx) const { return Element{Rational(idx)}; }

Element Carrier::zero() const {
  if (kind_ == CarrierKind::Finite) return element(zero_index_);
  Element z;
  z.coords.assign(rank_, Rational(0));
  z.tors.assign(moduli_.size(), 0);
  return z;
}

Element Carrier::add(const Element& a, const Element& b) const {
  if (kind_ == CarrierKind::Finite) return element(table_[index(a)][index(b)]);
  Element r;
  r.coords.resize(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r.coords[i] = a.coords[i] + b.coords[i];
  r.tors.resize(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.tors[i] = mod(a.tors[i] + b.tors[i], moduli_[i]);
  return r;
}

Element Carrier::negate(const Element& a) const {
  if (!negation_) throw UnsupportedOperation("negation on a semigroup-only carrier");
  if (kind_ == CarrierKind::Finite) return element(inverse_[index(a)]);
  return ambient_negate(a);
}

Element Carrier::ambient_negate(const Element& a) const {
  if (kind_ == CarrierKind::Finite) {
    if (inverse_[index(a)] < 0) throw UnsupportedOperation("element has no inverse");
    return element(inverse_[index(a)]);
  }
  Element r;
  r.coords.resize(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r.coords[i] = -a.coords[i];
  r.tors.resize(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.tors[i] = mod(-a.tors[i], moduli_[i]);
  return r;
}

Element Carrier::ambient_diff(const Element& b, const Element& a) const {
  if (kind_ == CarrierKind::Finite) {
    if (inverse_[index(a)] < 0) throw UnsupportedOperation("finite difference needs an inverse");
    return add(b, element(inverse_[index(a)]));
  }
  Element r;
  r.coords.resize(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r.coords[i] = b.coords[i] - a.coords[i];
  r.tors.resize(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.tors[i] = mod(b.tors[i] - a.tors[i], moduli_[i]);
  return r;
}

Element Carrier::multiple(std::int64_t n, const Element& a) const {
  if (n < 0) return multiple(-n, negate(a));
  Element r = zero();
  if (kind_ == CarrierKind::Finite) {
    for (std::int64_t i = 0; i < n; ++i) r = add(r, a);
    return r;
  }
  for (std::size_t i = 0; i < rank_; ++i) r.coords[i] = a.coords[i] * n;
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.tors[i] = mod(a.tors[i] * n, moduli_[i]);
  return r;
}

bool Carrier::ambient_contains(const Element& e) const {
  if (kind_ == CarrierKind::Finite) return index(e) >= 0;
  if (e.coords.size() != rank_ || e.tors.size() != moduli_.size()) return false;
  if (integral_)
    for (const auto& c : e.coords)
      if (c.denominator() != 1) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (e.tors[i] < 0 || e.tors[i] >= moduli_[i]) return false;
  return true;
}

bool Carrier::contains(const Element& e) const {
  if (!ambient_contains(e)) return false;
  if (kind_ == CarrierKind::Finite) return true;
  if (!domain_.contains(e)) return false;
  return !extra_ || (*extra_)(e);
}

std::string Carrier::format(const Element& e) const {
  if (kind_ == CarrierKind::Finite) {
    int i = index(e);
    return i >= 0 ? labels_[i] : raw_format(e);
  }
  return raw_format(e);
}

Element Carrier::parse_element(std::string_view text) const {
  text = trim(text);
  if (kind_ == CarrierKind::Finite) {
    std::string_view t = text;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = trim(t.substr(1, t.size() - 2));
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == t) return element(static_cast<int>(i));
    throw Error("unknown element '" + std::string(text) + "'");
  }
  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    parts.push_back(trim(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != rank_ + moduli_.size())
    throw Error("element '" + std::string(text) + "' has " + std::to_string(parts.size()) +
                " components, carrier expects " + std::to_string(rank_ + moduli_.size()));
  Element e;
  for (std::size_t i = 0; i < rank_; ++i) {
    auto r = parse_rational(parts[i]);
    if (!r) throw Error("bad coordinate '" + std::string(parts[i]) + "'");
    e.coords.push_back(*r);
  }
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    auto r = parse_rational(parts[rank_ + i]);
    if (!r || r->denominator() != 1) throw Error("bad residue '" + std::string(parts[rank_ + i]) + "'");
    e.tors.push_back(mod(r->numerator(), moduli_[i]));
  }
  if (!ambient_contains(e)) throw Error("element '" + std::string(text) + "' is outside the carrier");
  return e;
}

}  // namespace mixlat
