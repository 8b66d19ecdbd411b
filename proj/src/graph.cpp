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

#include "rsc/graph.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace rsc {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  for (const auto& a : arcs) ++g.offsets_[a.first + 1];
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adj_.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) g.adj_[i] = arcs[i].second;
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : neighbours(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> label(n, std::numeric_limits<std::size_t>::max());
  std::vector<VertexId> stack;
  std::size_t next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != std::numeric_limits<std::size_t>::max()) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbours(u)) {
        if (label[w] == std::numeric_limits<std::size_t>::max()) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  (void)connected_components(g, &count);
  return count <= 1;
}

bool is_tree(const Graph& g) {
  return g.num_vertices() > 0 && g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

bool is_forest(const Graph& g) {
  std::size_t count = 0;
  (void)connected_components(g, &count);
  return g.num_edges() + count == g.num_vertices();
}

std::size_t girth(const Graph& g) {
  if (is_forest(g)) return kInfiniteGirth;
  const std::size_t n = g.num_vertices();
  std::size_t best = kInfiniteGirth;
  std::vector<std::size_t> dist(n);
  std::vector<VertexId> par(n);
  std::queue<VertexId> q;
  // BFS from every vertex; a non-tree edge (u,w) closes a cycle of length at
  // most dist[u] + dist[w] + 1, and the minimum over all roots is exact.
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kInfiniteGirth);
    dist[s] = 0;
    par[s] = kNoVertex;
    q.push(s);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) continue;
      for (VertexId w : g.neighbours(u)) {
        if (dist[w] == kInfiniteGirth) {
          dist[w] = dist[u] + 1;
          par[w] = u;
          q.push(w);
        } else if (par[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

std::vector<Triangle> list_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto nb = g.neighbours(u);
    auto first = std::upper_bound(nb.begin(), nb.end(), u);
    for (auto i = first; i != nb.end(); ++i) {
      for (auto j = i + 1; j != nb.end(); ++j) {
        if (g.has_edge(*i, *j)) out.push_back({u, *i, *j});
      }
    }
  }
  return out;
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> side(n, 2);
  std::queue<VertexId> q;
  for (VertexId s = 0; s < n; ++s) {
    if (side[s] != 2) continue;
    side[s] = 0;
    q.push(s);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (VertexId w : g.neighbours(u)) {
        if (side[w] == 2) {
          side[w] = static_cast<std::uint8_t>(1 - side[u]);
          q.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_chordal(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  // Maximum cardinality search: visit order[0], order[1], ...
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> position(n, 0);
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId pick = kNoVertex;
    for (VertexId v = 0; v < n; ++v) {
      if (!visited[v] && (pick == kNoVertex || weight[v] > weight[pick])) pick = v;
    }
    visited[pick] = true;
    position[pick] = step;
    order.push_back(pick);
    for (VertexId w : g.neighbours(pick)) {
      if (!visited[w]) ++weight[w];
    }
  }
  // The reverse of the visit order is a perfect elimination ordering iff g is
  // chordal. For each v, its earlier-visited neighbours must form a clique;
  // it suffices to check they are adjacent to the latest-visited among them.
  for (VertexId v = 0; v < n; ++v) {
    VertexId p = kNoVertex;
    for (VertexId w : g.neighbours(v)) {
      if (position[w] < position[v] && (p == kNoVertex || position[w] > position[p])) p = w;
    }
    if (p == kNoVertex) continue;
    for (VertexId w : g.neighbours(v)) {
      if (w != p && position[w] < position[v] && !g.has_edge(p, w)) return false;
    }
  }
  return true;
}

bool is_2_degenerate(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 2) stack.push_back(v);
  }
  std::size_t count = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    ++count;
    for (VertexId w : g.neighbours(v)) {
      if (!removed[w] && --deg[w] == 2) stack.push_back(w);
    }
  }
  return count == n;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> index(g.num_vertices(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : g.neighbours(vertices[i])) {
      if (index[w] != kNoVertex && i < index[w]) edges.emplace_back(static_cast<VertexId>(i), index[w]);
    }
  }
  return Graph::from_edge_list(vertices.size(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<VertexId>(a.num_vertices());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edge_list(a.num_vertices() + b.num_vertices(), edges);
}

Graph attach_pendants(const Graph& g, VertexId v, std::size_t count) {
  if (v >= g.num_vertices()) throw InputError("attach_pendants: vertex out of range");
  auto edges = g.edges();
  const std::size_t n = g.num_vertices();
  for (std::size_t i = 0; i < count; ++i) edges.emplace_back(v, static_cast<VertexId>(n + i));
  return Graph::from_edge_list(n + count, edges);
}

Subdivision subdivide_all_edges(const Graph& g) {
  Subdivision out;
  const auto edges = g.edges();
  std::vector<Edge> next;
  next.reserve(2 * edges.size());
  auto fresh = static_cast<VertexId>(g.num_vertices());
  for (auto [u, v] : edges) {
    out.midpoint.emplace(Edge{u, v}, fresh);
    next.emplace_back(u, fresh);
    next.emplace_back(fresh, v);
    ++fresh;
  }
  out.graph = Graph::from_edge_list(fresh, next);
  return out;
}

RootedTree root_tree(const Graph& g, VertexId root) {
  const std::size_t n = g.num_vertices();
  if (n == 0 || g.num_edges() + 1 != n) throw InputError("graph is not a tree");
  if (root >= n) throw InputError("root out of range");
  RootedTree t;
  t.underlying = &g;
  t.root = root;
  t.parent.assign(n, kNoVertex);
  t.order.reserve(n);
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    t.order.push_back(u);
    // Reverse push so the lowest-indexed child is visited first.
    const auto nb = g.neighbours(u);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
      const VertexId w = *it;
      if (w == t.parent[u]) continue;
      // With n - 1 edges, reaching a discovered vertex again means a cycle.
      if (w == root || t.parent[w] != kNoVertex) throw InputError("graph is not a tree");
      t.parent[w] = u;
      stack.push_back(w);
    }
  }
  // n - 1 edges and everything reached: a tree.
  if (t.order.size() != n) throw InputError("graph is not a tree");
  t.child_offsets.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (t.parent[v] != kNoVertex) ++t.child_offsets[t.parent[v] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) t.child_offsets[i + 1] += t.child_offsets[i];
  t.child_list.resize(n - 1);
  std::vector<std::size_t> fill(t.child_offsets.begin(), t.child_offsets.end() - 1);
  // Vertices in increasing index order keep each child list sorted.
  for (VertexId v = 0; v < n; ++v) {
    if (t.parent[v] != kNoVertex) t.child_list[fill[t.parent[v]]++] = v;
  }
  return t;
}

RootedTree root_at_3plus(const Graph& g) {
  if (g.num_vertices() == 0 || g.num_edges() + 1 != g.num_vertices()) throw InputError("graph is not a tree");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) >= 3) return root_tree(g, v);
  }
  throw InputError("no 3-plus vertex: the tree is a path");
}

namespace families {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, e);
}

Graph hypercube(std::size_t d) {
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < d; ++b)
      if (!(v & (std::size_t{1} << b))) e.emplace_back(v, v | (std::size_t{1} << b));
  return Graph::from_edge_list(n, e);
}

Graph dart() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {3, 2}, {4, 2}}); }

}  // namespace families

}  // namespace rsc
