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

#include "mixlat/search.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <thread>

#include "mixlat/spec_io.hpp"

namespace mixlat {

namespace {

using Table = std::vector<std::vector<int>>;
using Relation = std::vector<std::vector<bool>>;

enum class Side { A, B, Group };

Side side_of(ClassId id) {
  switch (id) {
    case ClassId::AStructure:
    case ClassId::PositiveA:
    case ClassId::WeakMls:
    case ClassId::Mls:
      return Side::A;
    case ClassId::BStructure:
    case ClassId::PositiveB:
      return Side::B;
    default:
      return Side::Group;
  }
}

unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  unsigned h = std::thread::hardware_concurrency();
  return h ? std::min(h, 8u) : 2u;
}

int mul(const Table& t, int a, int b) {
  if (a == 0) return b;
  if (b == 0) return a;
  return t[a][b];
}

bool associative_so_far(const Table& t, int n) {
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      int ab = mul(t, a, b);
      if (ab < 0) continue;
      for (int c = 1; c < n; ++c) {
        int bc = mul(t, b, c);
        if (bc < 0) continue;
        int l = mul(t, ab, c), r = mul(t, a, bc);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

std::vector<int> flatten(const Table& t) {
  std::vector<int> out;
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Table canonical(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Table best = t;
  std::vector<int> best_flat = flatten(t);
  Table cur(n, std::vector<int>(n));
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cur[p[i]][p[j]] = p[t[i][j]];
    std::vector<int> f = flatten(cur);
    if (f < best_flat) {
      best_flat = std::move(f);
      best = cur;
    }
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return best;
}

void fill(Table& t, int n, std::size_t cell, const std::vector<std::pair<int, int>>& cells,
          std::set<std::vector<int>>& out) {
  if (cell == cells.size()) {
    out.insert(flatten(canonical(t)));
    return;
  }
  auto [i, j] = cells[cell];
  for (int v = 0; v < n; ++v) {
    if (cell == 0 && v != t[i][j]) continue;  // partition value is preset
    t[i][j] = t[j][i] = v;
    if (associative_so_far(t, n)) fill(t, n, cell + 1, cells, out);
  }
  if (cell != 0) t[i][j] = t[j][i] = -1;
}

Relation natural_order(const Table& t) {
  const int n = static_cast<int>(t.size());
  Relation r(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) r[u][t[u][w]] = true;
  return r;
}

bool antisymmetric(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (r[i][j] && r[j][i]) return false;
  return true;
}

struct OrderState {
  Relation rel;
  Relation forbidden;
};

// Adds a <= b and everything it forces; false on a contradiction.
bool force(OrderState& s, const Table& t, int a, int b) {
  const int n = static_cast<int>(t.size());
  std::vector<std::pair<int, int>> work = {{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (s.rel[x][y]) continue;
    if (s.forbidden[x][y] || (x != y && s.rel[y][x])) return false;
    s.rel[x][y] = true;
    for (int c = 0; c < n; ++c) {
      work.emplace_back(t[x][c], t[y][c]);
      if (s.rel[c][x]) work.emplace_back(c, y);
      if (s.rel[y][c]) work.emplace_back(x, c);
    }
  }
  return true;
}

void orders(OrderState s, const Table& t, std::size_t k, const std::vector<std::pair<int, int>>& pairs,
            std::size_t limit, std::vector<Relation>& out) {
  if (out.size() >= limit) return;
  if (k == pairs.size()) {
    out.push_back(s.rel);
    return;
  }
  auto [i, j] = pairs[k];
  if (s.rel[i][j] || s.rel[j][i]) {
    orders(std::move(s), t, k + 1, pairs, limit, out);
    return;
  }
  {
    OrderState inc = s;
    inc.forbidden[i][j] = inc.forbidden[j][i] = true;
    orders(std::move(inc), t, k + 1, pairs, limit, out);
  }
  for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
    OrderState next = s;
    if (force(next, t, a, b)) orders(std::move(next), t, k + 1, pairs, limit, out);
  }
}

struct Candidate {
  int size;
  std::size_t monoid;
  const Table* table;
  Relation le, sle;
};

std::vector<std::string> labels_for(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

bool is_group(const Table& t) {
  for (const auto& row : t)
    if (std::find(row.begin(), row.end(), 0) == row.end()) return false;
  return true;
}

std::optional<SearchWitness> try_structure(const StructurePtr& s, const Window& w, ClassId weaker,
                                           ClassId stronger) {
  ClassificationReport r = classify_structure(s, w);
  if (!(r.at(weaker).is_holds() && r.at(stronger).is_fails())) return std::nullopt;
  TwoOrderStructure copy = *s;
  copy.set_window(w);
  SearchWitness out{s, w, std::move(r), serialize(copy)};
  return out;
}

}  // namespace

std::pair<ClassId, ClassId> parse_target(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw UsageError("target must be 'WEAKER,STRONGER'");
  auto a = parse_class(text.substr(0, comma));
  auto b = parse_class(text.substr(comma + 1));
  if (!a || !b) throw UsageError("unknown class in target '" + std::string(text) + "'");
  for (auto& [lo, hi] : class_implications())
    if (lo == *a && hi == *b) return {*a, *b};
  throw UsageError("target " + class_name(*a) + "," + class_name(*b) +
                   " is not an adjacent pair of the implication chain");
}

std::vector<Table> canonical_monoids(int n, unsigned threads) {
  if (n < 1) throw UsageError("size must be positive");
  if (n == 1) return {Table{{0}}};
  Table base(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) base[0][i] = base[i][0] = i;
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  // one partition per value of the first free cell of row 1
  std::vector<std::future<std::set<std::vector<int>>>> parts;
  unsigned limit = thread_count(threads);
  std::vector<std::set<std::vector<int>>> done;
  for (int v = 0; v < n; ++v) {
    parts.push_back(std::async(std::launch::async, [=] {
      Table t = base;
      t[1][1] = v;
      std::set<std::vector<int>> found;
      if (associative_so_far(t, n)) fill(t, n, 0, cells, found);
      return found;
    }));
    if (parts.size() >= limit) {
      for (auto& f : parts) done.push_back(f.get());
      parts.clear();
    }
  }
  for (auto& f : parts) done.push_back(f.get());
  std::set<std::vector<int>> all;
  for (auto& d : done) all.insert(d.begin(), d.end());
  std::vector<Table> out;
  for (const auto& flat : all) {
    Table t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[i][j] = flat[i * n + j];
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Relation> compatible_orders(const Table& table, std::size_t limit) {
  const int n = static_cast<int>(table.size());
  OrderState s{Relation(n, std::vector<bool>(n, false)), Relation(n, std::vector<bool>(n, false))};
  for (int i = 0; i < n; ++i) s.rel[i][i] = true;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Relation> out;
  orders(std::move(s), table, 0, pairs, limit, out);
  return out;
}

SearchResult search_small_structures(const SearchOptions& opts) {
  if (opts.max_size < 1 || opts.max_size > 6) throw UsageError("max size must be between 1 and 6");
  auto [weaker, stronger] = opts.target;
  bool adjacent = false;
  for (auto& [lo, hi] : class_implications()) adjacent = adjacent || (lo == weaker && hi == stronger);
  if (!adjacent) throw UsageError("target is not an adjacent pair of the implication chain");
  SearchResult res;
  for (const auto& [s, w] : opts.seeds) {
    ++res.examined;
    if (auto wit = try_structure(s, w, weaker, stronger)) res.witnesses.push_back(std::move(*wit));
  }
  const Side side = side_of(weaker);
  std::vector<std::vector<Table>> monoids;
  std::vector<Candidate> cands;
  std::size_t budget = opts.budget > res.examined ? opts.budget - res.examined : 0;
  for (int n = 1; n <= opts.max_size && !res.partial; ++n) {
    monoids.push_back(canonical_monoids(n, opts.threads));
    res.monoids += monoids.back().size();
  }
  for (std::size_t si = 0; si < monoids.size() && !res.partial; ++si) {
    const int n = static_cast<int>(si) + 1;
    for (std::size_t mi = 0; mi < monoids[si].size() && !res.partial; ++mi) {
      const Table& t = monoids[si][mi];
      if (side == Side::Group) {
        if (!is_group(t)) continue;
        Relation id(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i) id[i][i] = true;
        if (cands.size() >= budget) {
          res.partial = true;
          break;
        }
        cands.push_back({n, mi, &t, id, id});
        continue;
      }
      Relation nat = natural_order(t);
      if (!antisymmetric(nat)) continue;
      std::size_t room = budget - cands.size();
      auto others = compatible_orders(t, room + 1);
      for (auto& o : others) {
        if (cands.size() >= budget) {
          res.partial = true;
          break;
        }
        if (side == Side::A) cands.push_back({n, mi, &t, o, nat});
        else cands.push_back({n, mi, &t, nat, o});
      }
    }
  }
  res.examined += cands.size();
  // classify in parallel chunks; results keep candidate order
  const unsigned workers = thread_count(opts.threads);
  std::vector<std::optional<SearchWitness>> found(cands.size());
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < cands.size(); i += workers) {
        const Candidate& c = cands[i];
        Carrier carrier = Carrier::finite(labels_for(c.size), *c.table, side == Side::Group);
        TwoOrderStructure s("search-" + std::to_string(c.size) + "-" + std::to_string(c.monoid) + "-" +
                                std::to_string(i),
                            carrier, OrderRelation::table(c.le), OrderRelation::table(c.sle), Window{});
        StructurePtr p;
        try {
          p = finalize_structure(std::move(s));
        } catch (const AxiomViolation&) {
          continue;
        }
        found[i] = try_structure(p, Window{}, weaker, stronger);
      }
    }));
  }
  for (auto& j : jobs) j.get();
  for (auto& f : found)
    if (f) res.witnesses.push_back(std::move(*f));
  return res;
}

}  // namespace mixlat
