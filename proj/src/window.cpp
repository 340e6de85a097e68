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

#include "mixlat/window.hpp"

#include <cstdlib>

#include "mixlat/errors.hpp"

namespace mixlat {

Window Window::padded() const {
  Window w = *this;
  for (auto& [lo, hi] : w.bounds) {
    lo -= pad;
    hi += pad;
  }
  w.pad = 0;
  return w;
}

bool Window::inside(const Element& e) const {
  if (e.coords.size() != bounds.size()) return false;
  for (std::size_t i = 0; i < bounds.size(); ++i)
    if (e.coords[i] < bounds[i].first || bounds[i].second < e.coords[i]) return false;
  return true;
}

bool Window::on_rim(const Element& e) const {
  for (std::size_t i = 0; i < bounds.size() && i < e.coords.size(); ++i)
    if (e.coords[i] == bounds[i].first || e.coords[i] == bounds[i].second) return true;
  return false;
}

std::size_t window_cap() {
  if (const char* env = std::getenv("MIXLAT_WINDOW_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

namespace {

std::vector<Element> enumerate_box(const Carrier& c, const Window& w) {
  if (c.kind() == CarrierKind::Finite) {
    std::vector<Element> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c.element(static_cast<int>(i)));
    return out;
  }
  if (w.bounds.size() != c.rank())
    throw Error("window has " + std::to_string(w.bounds.size()) + " bounds, carrier rank is " +
                std::to_string(c.rank()));
  if (w.q < 1) throw Error("window denominator cap must be positive");
  const std::int64_t step_den = c.integral() ? 1 : w.q;
  std::vector<std::vector<Rational>> ticks(c.rank());
  long double count = 1;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    auto [lo, hi] = w.bounds[i];
    if (hi < lo) throw Error("window bound has lo > hi");
    std::int64_t k0 = ceil_int(lo * step_den), k1 = floor_int(hi * step_den);
    if (k1 >= k0) count *= static_cast<long double>(k1 - k0 + 1);
    else count = 0;
  }
  for (auto m : c.moduli()) count *= static_cast<long double>(m);
  if (count > static_cast<long double>(window_cap()))
    throw WindowRefused(static_cast<std::size_t>(count), window_cap());
  for (std::size_t i = 0; i < c.rank(); ++i) {
    auto [lo, hi] = w.bounds[i];
    std::int64_t k0 = ceil_int(lo * step_den), k1 = floor_int(hi * step_den);
    for (std::int64_t k = k0; k <= k1; ++k) ticks[i].push_back(Rational(k, step_den));
  }
  std::vector<Element> out;
  Element cur = c.zero();
  // odometer over free coordinates, then residues
  std::vector<std::size_t> pos(c.rank(), 0);
  std::vector<std::int64_t> tpos(c.moduli().size(), 0);
  for (auto& t : ticks)
    if (t.empty()) return out;
  while (true) {
    for (std::size_t i = 0; i < c.rank(); ++i) cur.coords[i] = ticks[i][pos[i]];
    for (std::size_t i = 0; i < tpos.size(); ++i) cur.tors[i] = tpos[i];
    if (c.contains(cur)) out.push_back(cur);
    // increment, last position fastest
    std::size_t total = c.rank() + tpos.size();
    std::size_t j = total;
    while (j > 0) {
      --j;
      if (j >= c.rank()) {
        std::size_t t = j - c.rank();
        if (++tpos[t] < c.moduli()[t]) break;
        tpos[t] = 0;
      } else {
        if (++pos[j] < ticks[j].size()) break;
        pos[j] = 0;
      }
      if (j == 0) return out;
    }
    if (total == 0) return out;
  }
}

}  // namespace

std::vector<Element> enumerate_window(const Carrier& c, const Window& w) {
  return enumerate_box(c, w);
}

std::vector<Element> enumerate_search_box(const Carrier& c, const Window& w) {
  return enumerate_box(c, w.padded());
}

std::string format_window(const Window& w) {
  if (w.bounds.empty()) return "full";
  std::string out;
  for (std::size_t i = 0; i < w.bounds.size(); ++i) {
    if (i) out += ";";
    out += "[" + to_string(w.bounds[i].first) + "," + to_string(w.bounds[i].second) + "]";
  }
  out += ";q=" + std::to_string(w.q);
  if (w.pad) out += ";pad=" + std::to_string(w.pad);
  return out;
}

Window cube(std::size_t rank, Rational lo, Rational hi, std::int64_t q, std::int64_t pad) {
  Window w;
  w.bounds.assign(rank, {lo, hi});
  w.q = q;
  w.pad = pad;
  return w;
}

}  // namespace mixlat
