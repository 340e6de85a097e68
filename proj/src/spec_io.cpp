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

#include "mixlat/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace mixlat {

namespace {

const std::set<std::string> kSections = {"structure", "carrier", "order.initial", "order.specific",
                                         "window"};

// Error at an offset inside an entry value.
struct ValueError {
  std::size_t offset;
  std::string msg;
};

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string trimmed(std::string_view s) {
  std::size_t a = skip_space(s, 0), b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits on `sep` outside parentheses and brackets; keeps offsets.
std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view s, char sep) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    char c = i < s.size() ? s[i] : sep;
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if ((c == sep && depth == 0) || i == s.size()) {
      out.emplace_back(s.substr(start, i - start), start);
      start = i + 1;
    }
  }
  return out;
}

// Offset of the first non-space character.
std::size_t lead(std::string_view s) { return skip_space(s, 0); }

class LinearParser {
 public:
  LinearParser(std::string_view s, std::size_t base, const Carrier& c) : s_(s), base_(base), c_(c) {}

  // sum of terms; constants are accumulated separately
  std::vector<LinTerm> terms(Rational& constant) {
    std::map<std::pair<bool, int>, Rational> acc;
    constant = 0;
    bool first = true;
    while (true) {
      i_ = skip_space(s_, i_);
      if (i_ >= s_.size()) break;
      int sign = 1;
      if (s_[i_] == '+' || s_[i_] == '-') {
        sign = s_[i_] == '-' ? -1 : 1;
        ++i_;
        i_ = skip_space(s_, i_);
      } else if (!first) {
        break;
      }
      first = false;
      Rational coef(sign);
      bool have_num = false;
      std::size_t j = i_;
      while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '/' || s_[j] == '.')) ++j;
      if (j > i_) {
        auto r = parse_rational(s_.substr(i_, j - i_));
        if (!r) throw ValueError{base_ + i_, "bad number"};
        coef *= *r;
        have_num = true;
        i_ = skip_space(s_, j);
        if (i_ < s_.size() && s_[i_] == '*') i_ = skip_space(s_, i_ + 1);
      }
      if (i_ < s_.size() && (s_[i_] == 'x' || s_[i_] == 't')) {
        bool tors = s_[i_] == 't';
        std::size_t k = i_ + 1;
        while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
        if (k == i_ + 1) throw ValueError{base_ + i_, "expected variable index"};
        int idx = std::stoi(std::string(s_.substr(i_ + 1, k - i_ - 1))) - 1;
        std::size_t limit = tors ? c_.moduli().size() : c_.rank();
        if (idx < 0 || static_cast<std::size_t>(idx) >= limit)
          throw ValueError{base_ + i_, "variable " + std::string(s_.substr(i_, k - i_)) +
                                           " is outside the carrier signature"};
        acc[{tors, idx}] += coef;
        i_ = k;
      } else if (have_num) {
        constant += coef;
      } else {
        throw ValueError{base_ + i_, "expected a term"};
      }
    }
    std::vector<LinTerm> out;
    for (auto& [k, v] : acc)
      if (v != 0) out.push_back(LinTerm{v, Var{k.first, k.second}});
    return out;
  }

  std::size_t pos() const { return i_; }
  void set_pos(std::size_t p) { i_ = p; }

 private:
  std::string_view s_;
  std::size_t base_;
  const Carrier& c_;
  std::size_t i_ = 0;
};

Element parse_point(std::string_view text, std::size_t base, const Carrier& c) {
  try {
    return c.parse_element(text);
  } catch (const Error& e) {
    throw ValueError{base + lead(text), e.what()};
  }
}

Atom parse_atom(std::string_view text, std::size_t base, const Carrier& c) {
  std::string t = trimmed(text);
  std::size_t off = base + lead(text);
  if (t == "all") return Atom{};
  auto colon = t.find(':');
  if (colon == std::string::npos) throw ValueError{off, "expected 'kind: ...' atom"};
  std::string kind = trimmed(std::string_view(t).substr(0, colon));
  std::string_view body = std::string_view(t).substr(colon + 1);
  std::size_t body_off = off + colon + 1;
  Atom a;
  if (kind == "points") {
    a.kind = AtomKind::Points;
    for (auto [p, o] : split_top(body, ',')) {
      if (trimmed(p).empty()) throw ValueError{body_off + o, "empty point"};
      a.points.push_back(parse_point(p, body_off + o, c));
    }
    std::sort(a.points.begin(), a.points.end());
    return a;
  }
  if (kind != "lin" && kind != "eq" && kind != "mod") throw ValueError{off, "unknown atom kind '" + kind + "'"};
  if (c.kind() == CarrierKind::Finite)
    throw ValueError{off, "'" + kind + "' atoms need a grid carrier; use points"};
  // locate the relation
  std::size_t r = body.find_first_of("<>=");
  if (r == std::string_view::npos) throw ValueError{body_off, "missing relation"};
  std::size_t rlen = 1;
  Rel rel = Rel::Eq;
  if (body[r] == '>') rel = Rel::Gt;
  if (body[r] == '<') rel = Rel::Lt;
  if (r + 1 < body.size() && body[r + 1] == '=' && body[r] != '=') {
    rlen = 2;
    rel = rel == Rel::Gt ? Rel::Ge : Rel::Le;
  }
  Rational lconst, rconst;
  LinearParser lp(body.substr(0, r), body_off, c);
  a.terms = lp.terms(lconst);
  if (skip_space(body.substr(0, r), lp.pos()) != r) throw ValueError{body_off + lp.pos(), "unexpected text"};
  std::string_view rhs = body.substr(r + rlen);
  std::size_t rhs_off = body_off + r + rlen;
  if (kind == "mod") {
    if (rel != Rel::Eq) throw ValueError{body_off + r, "mod atoms use '='"};
    auto open = rhs.find('(');
    auto close = rhs.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
      throw ValueError{rhs_off, "expected 'r (mod m)'"};
    std::string inner = trimmed(rhs.substr(open + 1, close - open - 1));
    if (inner.rfind("mod", 0) != 0) throw ValueError{rhs_off + open, "expected '(mod m)'"};
    auto m = parse_rational(trimmed(std::string_view(inner).substr(3)));
    auto res = parse_rational(trimmed(rhs.substr(0, open)));
    if (!m || !is_integer(*m) || *m <= 0) throw ValueError{rhs_off + open, "bad modulus"};
    if (!res || !is_integer(*res)) throw ValueError{rhs_off, "bad residue"};
    if (!is_integer(lconst)) throw ValueError{body_off, "mod atoms need integral constants"};
    a.kind = AtomKind::Mod;
    a.modulus = m->numerator();
    std::int64_t v = res->numerator() - lconst.numerator();
    a.residue = ((v % a.modulus) + a.modulus) % a.modulus;
    for (auto& term : a.terms)
      if (!is_integer(term.coef)) throw ValueError{body_off, "mod atoms need integral coefficients"};
    return a;
  }
  LinearParser rp(rhs, rhs_off, c);
  std::vector<LinTerm> rterms = rp.terms(rconst);
  if (skip_space(rhs, rp.pos()) != rhs.size()) throw ValueError{rhs_off + rp.pos(), "unexpected text"};
  // move everything to the left: terms - rterms REL rconst - lconst
  for (auto& term : rterms) {
    auto it = std::find_if(a.terms.begin(), a.terms.end(),
                           [&](const LinTerm& x) { return x.var == term.var; });
    if (it == a.terms.end()) a.terms.push_back(LinTerm{-term.coef, term.var});
    else it->coef -= term.coef;
  }
  a.terms.erase(std::remove_if(a.terms.begin(), a.terms.end(), [](const LinTerm& x) { return x.coef == 0; }),
                a.terms.end());
  std::sort(a.terms.begin(), a.terms.end(), [](const LinTerm& x, const LinTerm& y) {
    return std::make_pair(x.var.torsion, x.var.index) < std::make_pair(y.var.torsion, y.var.index);
  });
  a.rhs = rconst - lconst;
  a.rel = rel;
  if (kind == "eq") {
    if (rel != Rel::Eq) throw ValueError{body_off + r, "eq atoms use '='"};
    a.kind = AtomKind::Eq;
  } else {
    a.kind = AtomKind::Lin;
  }
  return a;
}

PositiveSet parse_set_at(std::string_view text, std::size_t base, const Carrier& c) {
  std::vector<Clause> clauses;
  for (auto [cl, co] : split_top(text, '|')) {
    Clause clause;
    for (auto [at, ao] : split_top(cl, '&')) {
      if (trimmed(at).empty()) throw ValueError{base + co + ao, "empty atom"};
      clause.atoms.push_back(parse_atom(at, base + co + ao, c));
    }
    clauses.push_back(std::move(clause));
  }
  return PositiveSet(std::move(clauses));
}

bool parse_bool(const SpecEntry& e) {
  if (e.value == "true" || e.value == "yes" || e.value == "1") return true;
  if (e.value == "false" || e.value == "no" || e.value == "0") return false;
  throw ParseError(e.line, e.column, "expected true or false");
}

std::int64_t parse_int(const SpecEntry& e, std::string_view text, std::size_t offset) {
  auto r = parse_rational(trimmed(text));
  if (!r || !is_integer(*r)) throw ParseError(e.line, e.column + offset, "expected an integer");
  return r->numerator();
}

template <class Fn>
auto at_entry(const SpecEntry& e, Fn&& fn) {
  try {
    return fn();
  } catch (const ValueError& v) {
    throw ParseError(e.line, e.column + v.offset, v.msg);
  }
}

}  // namespace

const SpecEntry* SpecSection::find(std::string_view key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

const SpecSection* SpecDocument::find(std::string_view name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

SpecDocument parse_spec(std::string_view text) {
  SpecDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = skip_space(line, 0);
    if (first == line.size()) continue;
    if (line[first] == '[') {
      std::size_t close = line.find(']', first);
      if (close == std::string_view::npos) throw ParseError(line_no, first + 1, "unterminated section header");
      if (skip_space(line, close + 1) != line.size())
        throw ParseError(line_no, close + 2, "text after section header");
      std::string name = trimmed(line.substr(first + 1, close - first - 1));
      if (!kSections.count(name)) throw ParseError(line_no, first + 2, "unknown section [" + name + "]");
      if (doc.find(name)) throw ParseError(line_no, first + 1, "duplicate section [" + name + "]");
      doc.sections.push_back(SpecSection{name, line_no, {}});
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, first + 1, "expected 'key = value'");
    if (doc.sections.empty()) throw ParseError(line_no, first + 1, "entry outside any section");
    std::string key = trimmed(line.substr(0, eq));
    if (key.empty()) throw ParseError(line_no, first + 1, "missing key");
    std::size_t vstart = skip_space(line, eq + 1);
    SpecEntry e{key, trimmed(line.substr(eq + 1)), line_no, vstart + 1};
    SpecSection& sec = doc.sections.back();
    if (sec.find(key)) throw ParseError(line_no, first + 1, "duplicate key '" + key + "'");
    sec.entries.push_back(std::move(e));
  }
  if (!doc.find("carrier")) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing [carrier] section");
  return doc;
}

namespace {

const SpecEntry& require(const SpecSection& sec, std::string_view key) {
  const SpecEntry* e = sec.find(key);
  if (!e) throw ParseError(sec.line, 1, "[" + sec.name + "] needs '" + std::string(key) + "'");
  return *e;
}

void reject_unknown(const SpecSection& sec, std::initializer_list<std::string_view> keys) {
  for (const auto& e : sec.entries)
    if (std::find(keys.begin(), keys.end(), e.key) == keys.end())
      throw ParseError(e.line, 1, "unknown key '" + e.key + "' in [" + sec.name + "]");
}

Carrier build_carrier(const SpecSection& sec) {
  reject_unknown(sec, {"kind", "rank", "moduli", "negation", "integral", "domain", "elements", "add"});
  const SpecEntry& kind = require(sec, "kind");
  bool negation = false;
  if (auto* e = sec.find("negation")) negation = parse_bool(*e);
  if (kind.value == "finite") {
    const SpecEntry& el = require(sec, "elements");
    const SpecEntry& add = require(sec, "add");
    std::vector<std::string> labels;
    for (auto [p, o] : split_top(el.value, ',')) {
      std::string l = trimmed(p);
      if (l.empty()) throw ParseError(el.line, el.column + o, "empty element label");
      if (std::find(labels.begin(), labels.end(), l) != labels.end())
        throw ParseError(el.line, el.column + o, "duplicate element '" + l + "'");
      labels.push_back(l);
    }
    std::vector<std::vector<int>> table;
    for (auto [row, ro] : split_top(add.value, ';')) {
      std::vector<int> r;
      for (auto [cell, co] : split_top(row, ',')) {
        std::string l = trimmed(cell);
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end())
          throw ParseError(add.line, add.column + ro + co + lead(cell), "unknown element '" + l + "'");
        r.push_back(static_cast<int>(it - labels.begin()));
      }
      if (r.size() != labels.size())
        throw ParseError(add.line, add.column + ro, "addition table is not square");
      table.push_back(std::move(r));
    }
    if (table.size() != labels.size()) throw ParseError(add.line, add.column, "addition table is not square");
    try {
      return Carrier::finite(std::move(labels), std::move(table), negation);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(add.line, add.column, e.what());
    }
  }
  if (kind.value != "grid") throw ParseError(kind.line, kind.column, "kind must be grid or finite");
  const SpecEntry& rank_e = require(sec, "rank");
  std::int64_t rank = parse_int(rank_e, rank_e.value, 0);
  if (rank < 0 || rank > 16) throw ParseError(rank_e.line, rank_e.column, "rank out of range");
  std::vector<std::int64_t> moduli;
  if (auto* e = sec.find("moduli")) {
    for (auto [p, o] : split_top(e->value, ',')) {
      std::int64_t m = parse_int(*e, p, o);
      if (m < 2) throw ParseError(e->line, e->column + o, "modulus must be at least 2");
      moduli.push_back(m);
    }
  }
  bool integral = false;
  if (auto* e = sec.find("integral")) integral = parse_bool(*e);
  Carrier base = Carrier::grid(static_cast<std::size_t>(rank), moduli, integral, false);
  PositiveSet domain = PositiveSet::everything();
  if (auto* e = sec.find("domain")) domain = at_entry(*e, [&] { return parse_set_at(e->value, 0, base); });
  if (negation && !domain.is_everything())
    throw ParseError(sec.line, 1, "a restricted domain cannot carry negation");
  return Carrier::grid(static_cast<std::size_t>(rank), moduli, integral, negation, domain);
}

OrderRelation build_order(const SpecDocument& doc, const std::string& name, const Carrier& c) {
  const SpecSection* sec = doc.find(name);
  if (!sec) throw ParseError(1, 1, "missing [" + name + "] section");
  reject_unknown(*sec, {"positive", "pairs"});
  const SpecEntry* pos = sec->find("positive");
  const SpecEntry* pairs = sec->find("pairs");
  if ((pos != nullptr) == (pairs != nullptr))
    throw ParseError(sec->line, 1, "[" + name + "] needs exactly one of 'positive' or 'pairs'");
  if (pos) return OrderRelation::positive(at_entry(*pos, [&] { return parse_set_at(pos->value, 0, c); }));
  if (c.kind() != CarrierKind::Finite)
    throw ParseError(pairs->line, pairs->column, "pairs need a finite carrier");
  std::vector<std::pair<Element, Element>> ps;
  if (trimmed(pairs->value).empty()) return OrderRelation::pairs(ps);
  for (auto [p, o] : split_top(pairs->value, ';')) {
    std::string t = trimmed(p);
    std::size_t off = o + lead(p);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
      throw ParseError(pairs->line, pairs->column + off, "expected '(a,b)'");
    auto parts = split_top(std::string_view(t).substr(1, t.size() - 2), ',');
    if (parts.size() != 2) throw ParseError(pairs->line, pairs->column + off, "expected '(a,b)'");
    auto el = [&](std::pair<std::string_view, std::size_t> part) {
      return at_entry(*pairs, [&] { return parse_point(part.first, off + 1 + part.second, c); });
    };
    ps.emplace_back(el(parts[0]), el(parts[1]));
  }
  return OrderRelation::pairs(std::move(ps));
}

Window build_window(const SpecDocument& doc, const Carrier& c) {
  if (c.kind() == CarrierKind::Finite) return Window{};
  const SpecSection* sec = doc.find("window");
  Window w;
  if (!sec) {
    w = cube(c.rank(), -4, 4, 1, 0);
  } else {
    reject_unknown(*sec, {"bounds", "q", "pad"});
    const SpecEntry& b = require(*sec, "bounds");
    for (auto [p, o] : split_top(b.value, ';')) {
      std::string t = trimmed(p);
      std::size_t off = o + lead(p);
      if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError(b.line, b.column + off, "expected '[lo,hi]'");
      auto parts = split_top(std::string_view(t).substr(1, t.size() - 2), ',');
      if (parts.size() != 2) throw ParseError(b.line, b.column + off, "expected '[lo,hi]'");
      auto lo = parse_rational(trimmed(parts[0].first));
      auto hi = parse_rational(trimmed(parts[1].first));
      if (!lo || !hi) throw ParseError(b.line, b.column + off, "bad bound");
      if (*hi < *lo) throw ParseError(b.line, b.column + off, "lower bound above upper bound");
      w.bounds.emplace_back(*lo, *hi);
    }
    if (w.bounds.size() != c.rank())
      throw ParseError(b.line, b.column, "window has " + std::to_string(w.bounds.size()) +
                                             " bounds, carrier rank is " + std::to_string(c.rank()));
    if (auto* q = sec->find("q")) {
      w.q = parse_int(*q, q->value, 0);
      if (w.q < 1) throw ParseError(q->line, q->column, "q must be positive");
    }
    if (auto* p = sec->find("pad")) {
      w.pad = parse_int(*p, p->value, 0);
      if (w.pad < 0) throw ParseError(p->line, p->column, "pad must be nonnegative");
      return w;
    }
  }
  // default pad: the widest extent of the box
  Rational widest = 0;
  for (auto& [lo, hi] : w.bounds) widest = std::max(widest, hi - lo);
  w.pad = ceil_int(widest);
  return w;
}

}  // namespace

PositiveSet parse_positive_set(std::string_view text, const Carrier& c) {
  try {
    return parse_set_at(text, 0, c);
  } catch (const ValueError& v) {
    throw ParseError(1, v.offset + 1, v.msg);
  }
}

TwoOrderStructure build_unvalidated(const SpecDocument& doc) {
  std::string name = "unnamed";
  if (const SpecSection* s = doc.find("structure")) {
    reject_unknown(*s, {"name"});
    if (auto* e = s->find("name")) name = e->value;
  }
  Carrier c = build_carrier(*doc.find("carrier"));
  OrderRelation initial = build_order(doc, "order.initial", c);
  OrderRelation specific = build_order(doc, "order.specific", c);
  Window w = build_window(doc, c);
  try {
    return TwoOrderStructure(name, c, initial, specific, w);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(1, 1, e.what());
  }
}

StructurePtr build_structure(const SpecDocument& doc) { return finalize_structure(build_unvalidated(doc)); }

StructurePtr load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return build_structure(parse_spec(ss.str()));
}

std::string serialize(const TwoOrderStructure& s) {
  const Carrier& c = s.carrier();
  if (c.has_extra_domain())
    throw UnsupportedOperation("domain '" + c.extra_domain_description() + "' has no spec form");
  auto fmt = [&](const Element& e) { return c.format(e); };
  std::ostringstream out;
  out << "[structure]\nname = " << s.name() << "\n\n[carrier]\n";
  if (c.kind() == CarrierKind::Finite) {
    out << "kind = finite\nelements = ";
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c.labels()[i];
    out << "\nadd = ";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ";";
      for (std::size_t j = 0; j < c.size(); ++j) out << (j ? "," : "") << c.labels()[c.table()[i][j]];
    }
    out << "\nnegation = " << (c.has_negation() ? "true" : "false") << "\n";
  } else {
    out << "kind = grid\nrank = " << c.rank() << "\n";
    if (!c.moduli().empty()) {
      out << "moduli = ";
      for (std::size_t i = 0; i < c.moduli().size(); ++i) out << (i ? "," : "") << c.moduli()[i];
      out << "\n";
    }
    out << "integral = " << (c.integral() ? "true" : "false") << "\n";
    out << "negation = " << (c.has_negation() ? "true" : "false") << "\n";
    if (!c.domain().is_everything()) out << "domain = " << format_positive_set(c.domain(), fmt) << "\n";
  }
  for (Which w : {Which::Initial, Which::Specific}) {
    const OrderRelation& o = s.order(w);
    out << "\n[order." << (w == Which::Initial ? "initial" : "specific") << "]\n";
    if (o.kind() == OrderRelation::Kind::Positive) {
      out << "positive = " << format_positive_set(o.positive_set(), fmt) << "\n";
      continue;
    }
    // pairs and tables both serialize as the strict part of the relation
    std::vector<std::pair<Element, Element>> ps;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        if (i != j && o.matrix()[i][j]) ps.emplace_back(c.element(static_cast<int>(i)), c.element(static_cast<int>(j)));
    out << "pairs = ";
    for (std::size_t k = 0; k < ps.size(); ++k)
      out << (k ? ";" : "") << "(" << c.format(ps[k].first) << "," << c.format(ps[k].second) << ")";
    out << "\n";
  }
  if (c.kind() == CarrierKind::Grid) {
    const Window& w = s.default_window();
    out << "\n[window]\nbounds = ";
    for (std::size_t i = 0; i < w.bounds.size(); ++i)
      out << (i ? ";" : "") << "[" << to_string(w.bounds[i].first) << "," << to_string(w.bounds[i].second) << "]";
    out << "\nq = " << w.q << "\npad = " << w.pad << "\n";
  }
  return out.str();
}

}  // namespace mixlat
