// Copyright 2026 The rsc Authors
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

#include "rsc/colouring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rsc {

Colouring::Colouring(std::vector<Colour> colours, int k) : colours_(std::move(colours)), k_(k) {
  for (std::size_t v = 0; v < colours_.size(); ++v) {
    if (colours_[v] < 0 || colours_[v] >= k_) {
      throw InputError("colour " + std::to_string(colours_[v]) + " of vertex " + std::to_string(v) +
                       " outside [0," + std::to_string(k_) + ")");
    }
  }
}

Colouring Colouring::inferred(std::vector<Colour> colours) {
  int k = 0;
  for (Colour c : colours) k = std::max(k, c + 1);
  return Colouring(std::move(colours), k);
}

int Colouring::used_colours() const {
  std::vector<bool> seen(static_cast<std::size_t>(k_), false);
  int count = 0;
  for (Colour c : colours_) {
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

std::vector<std::vector<VertexId>> Colouring::classes() const {
  std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(k_));
  for (std::size_t v = 0; v < colours_.size(); ++v) out[colours_[v]].push_back(static_cast<VertexId>(v));
  return out;
}

void PartialColouring::set(VertexId v, Colour c) {
  if (v >= colours_.size()) throw InputError("precoloured vertex out of range");
  if (c < 0 || c >= k_) throw InputError("precolour outside [0,k)");
  colours_[v] = c;
}

bool PartialColouring::extended_by(const Colouring& c) const {
  if (c.size() != colours_.size()) return false;
  for (std::size_t v = 0; v < colours_.size(); ++v) {
    if (colours_[v] != kUncoloured && colours_[v] != c[static_cast<VertexId>(v)]) return false;
  }
  return true;
}

namespace {

void require_domain(const Graph& g, const Colouring& c) {
  if (c.size() != g.num_vertices()) {
    throw InputError("colouring covers " + std::to_string(c.size()) + " vertices, graph has " +
                     std::to_string(g.num_vertices()));
  }
}

// Union-find with path halving.
struct Dsu {
  std::vector<VertexId> up;
  explicit Dsu(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), VertexId{0}); }
  VertexId find(VertexId x) {
    while (up[x] != x) {
      up[x] = up[up[x]];
      x = up[x];
    }
    return x;
  }
  void unite(VertexId a, VertexId b) { up[find(a)] = find(b); }
};

}  // namespace

bool is_proper(const Graph& g, const Colouring& c) {
  require_domain(g, c);
  for (auto [u, v] : g.edges()) {
    if (c[u] == c[v]) return false;
  }
  return true;
}

std::optional<RsViolation> find_rs_violation(const Graph& g, const Colouring& c) {
  require_domain(g, c);
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> first_seen(static_cast<std::size_t>(c.k()), kNoVertex);
  for (VertexId y = 0; y < n; ++y) {
    // Neighbours are sorted, so for each lower colour the first two hits are
    // the two smallest; the lowest offending colour wins.
    std::optional<RsViolation> best;
    Colour best_colour = c.k();
    std::vector<Colour> touched;
    for (VertexId x : g.neighbours(y)) {
      const Colour cx = c[x];
      if (cx >= c[y]) continue;
      if (first_seen[cx] == kNoVertex) {
        first_seen[cx] = x;
        touched.push_back(cx);
      } else if (cx < best_colour) {
        best_colour = cx;
        best = RsViolation{RsViolation::Kind::bicoloured_p3, {first_seen[cx], y, x}};
      }
    }
    for (Colour t : touched) first_seen[t] = kNoVertex;
    if (best) return best;
  }
  for (auto [u, v] : g.edges()) {
    if (c[u] == c[v]) return RsViolation{RsViolation::Kind::improper_edge, {u, v}};
  }
  return std::nullopt;
}

bool is_star(const Graph& g, const Colouring& c) {
  if (!is_proper(g, c)) return false;
  // Group edges by their (unordered) colour pair. Inside one group the edges
  // form a star forest iff each edge has an endpoint of group-degree one.
  std::map<std::pair<Colour, Colour>, std::vector<Edge>> groups;
  for (auto [u, v] : g.edges()) {
    groups[{std::min(c[u], c[v]), std::max(c[u], c[v])}].emplace_back(u, v);
  }
  std::map<VertexId, std::size_t> deg;
  for (const auto& [pair, edges] : groups) {
    deg.clear();
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    for (auto [u, v] : edges) {
      if (deg[u] > 1 && deg[v] > 1) return false;
    }
  }
  return true;
}

bool is_ordered(const Graph& g, const Colouring& c) {
  if (!is_proper(g, c)) return false;
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> by_colour(n);
  std::iota(by_colour.begin(), by_colour.end(), VertexId{0});
  std::stable_sort(by_colour.begin(), by_colour.end(), [&](VertexId a, VertexId b) { return c[a] < c[b]; });
  Dsu dsu(n);
  std::map<VertexId, int> top_count;
  std::size_t i = 0;
  while (i < n) {
    const Colour level = c[by_colour[i]];
    std::size_t j = i;
    for (; j < n && c[by_colour[j]] == level; ++j) {
      VertexId v = by_colour[j];
      for (VertexId w : g.neighbours(v)) {
        if (c[w] <= level) dsu.unite(v, w);
      }
    }
    top_count.clear();
    for (std::size_t t = i; t < j; ++t) {
      if (++top_count[dsu.find(by_colour[t])] > 1) return false;
    }
    i = j;
  }
  return true;
}

bool is_distance_two(const Graph& g, const Colouring& c) {
  if (!is_proper(g, c)) return false;
  std::vector<VertexId> owner(static_cast<std::size_t>(c.k()), kNoVertex);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (VertexId w : g.neighbours(v)) {
      if (owner[c[w]] == v) return false;
      owner[c[w]] = v;
    }
  }
  return true;
}

namespace {

// Depth-first search for a simple path on `length` vertices from `start`
// ending at a vertex coloured `end_colour`.
bool find_path_to_colour(const Graph& g, const Colouring& c, std::vector<VertexId>& path,
                         std::vector<bool>& on_path, std::size_t length, Colour end_colour) {
  if (path.size() == length) return c[path.back()] == end_colour;
  for (VertexId w : g.neighbours(path.back())) {
    if (on_path[w]) continue;
    path.push_back(w);
    on_path[w] = true;
    if (find_path_to_colour(g, c, path, on_path, length, end_colour)) return true;
    on_path[w] = false;
    path.pop_back();
  }
  return false;
}

void check_path_property(const Graph& g, const Colouring& c, PropertyReport::Item& item,
                         std::size_t length, Colour end_colour) {
  std::vector<bool> on_path(g.num_vertices(), false);
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (c[s] != 0) continue;
    std::vector<VertexId> path{s};
    on_path[s] = true;
    const bool hit = find_path_to_colour(g, c, path, on_path, length, end_colour);
    on_path[s] = false;
    if (hit) {
      item.pass = false;
      item.witness = path;
      return;
    }
  }
}

}  // namespace

PropertyReport check_properties(const Graph& g, const Colouring& c) {
  if (c.k() > 3 || !is_rs(g, c)) throw InputError("check_properties needs a 3-rs colouring");
  PropertyReport report;
  auto& [p1, p2, p3, p4, p6] = report.items;
  const std::size_t n = g.num_vertices();
  for (VertexId v = 0; v < n && p1.pass; ++v) {
    if (g.degree(v) >= 3 && c[v] == 2) {
      p1.pass = false;
      p1.witness = {v};
    }
  }
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) >= 3 && g.degree(v) >= 3 && c[v] != 1 - c[u]) {
      p2.pass = false;
      p2.witness = {u, v};
      break;
    }
  }
  check_path_property(g, c, p3, 3, 0);
  check_path_property(g, c, p4, 4, 1);
  check_path_property(g, c, p6, 6, 0);
  return report;
}

}  // namespace rsc
