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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rsc {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

/// Raised for malformed input: bad files, out-of-range vertices, violated
/// preconditions on caller-supplied data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph in compressed adjacency form. Immutable once built;
/// every neighbour list is sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices [0, n). Duplicate and reversed pairs collapse
  /// into one edge. Throws InputError on an out-of-range endpoint or a loop.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  [[nodiscard]] std::size_t num_vertices() const noexcept { return n_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return adj_.size() / 2; }

  [[nodiscard]] std::span<const VertexId> neighbours(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  [[nodiscard]] bool has_edge(VertexId u, VertexId v) const;
  [[nodiscard]] std::size_t max_degree() const noexcept;

  /// Edge list with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adj_;
};

[[nodiscard]] inline std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

/// Component label per vertex (labels dense from 0, in order of lowest vertex).
[[nodiscard]] std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);
[[nodiscard]] bool is_connected(const Graph& g);
[[nodiscard]] bool is_tree(const Graph& g);
[[nodiscard]] bool is_forest(const Graph& g);

/// Length of a shortest cycle, or kInfiniteGirth for a forest.
[[nodiscard]] std::size_t girth(const Graph& g);

using Triangle = std::array<VertexId, 3>;

/// Every triangle once, each as an ascending triple; the list is sorted.
[[nodiscard]] std::vector<Triangle> list_triangles(const Graph& g);

/// Two-colouring of the vertices (side 0/1 per vertex) if one exists.
[[nodiscard]] std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);
[[nodiscard]] inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Maximum cardinality search followed by a perfect-elimination check.
[[nodiscard]] bool is_chordal(const Graph& g);

/// True when the vertices can be removed one at a time, each having degree at
/// most two in what remains.
[[nodiscard]] bool is_2_degenerate(const Graph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
[[nodiscard]] Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// Disjoint union; vertices of `b` are shifted by a.num_vertices().
[[nodiscard]] Graph disjoint_union(const Graph& a, const Graph& b);

/// Adds `count` fresh degree-one vertices adjacent to v. Old indices are kept;
/// the new vertices are numbered from g.num_vertices() upward.
[[nodiscard]] Graph attach_pendants(const Graph& g, VertexId v, std::size_t count);

struct Subdivision {
  Graph graph;
  /// (u, v) with u < v  ->  the vertex placed in the middle of uv.
  std::map<Edge, VertexId> midpoint;
};

/// Replaces every edge uv by a path u, w, v through a fresh vertex w. Fresh
/// vertices are numbered n, n+1, ... in sorted-edge order.
[[nodiscard]] Subdivision subdivide_all_edges(const Graph& g);

/// A tree with a designated root, children stored in compressed form.
struct RootedTree {
  const Graph* underlying = nullptr;    ///< not owned; must outlive the tree
  VertexId root = 0;
  std::vector<VertexId> parent;          ///< kNoVertex for the root
  std::vector<std::size_t> child_offsets;
  std::vector<VertexId> child_list;
  std::vector<VertexId> order;           ///< discovery order, root first

  [[nodiscard]] std::span<const VertexId> children(VertexId v) const {
    return {child_list.data() + child_offsets[v], child_list.data() + child_offsets[v + 1]};
  }
  [[nodiscard]] std::size_t num_vertices() const { return parent.size(); }
  [[nodiscard]] std::size_t num_children(VertexId v) const {
    return child_offsets[v + 1] - child_offsets[v];
  }
};

/// Roots `g` at `root` (iterative DFS). Throws InputError if g is not a tree.
[[nodiscard]] RootedTree root_tree(const Graph& g, VertexId root);

/// Roots a tree at its lowest-indexed vertex of degree >= 3. Throws InputError
/// if g is not a tree or has no such vertex (a path).
[[nodiscard]] RootedTree root_at_3plus(const Graph& g);

// Common families used throughout the tests, CLI and benchmarks.
namespace families {
[[nodiscard]] Graph path(std::size_t n);
[[nodiscard]] Graph cycle(std::size_t n);
[[nodiscard]] Graph complete(std::size_t n);
[[nodiscard]] Graph star(std::size_t leaves);
[[nodiscard]] Graph hypercube(std::size_t d);
/// x=0, y=1, z=2, v=3, w=4 with edges xy, yz, yv, yw, vz, wz.
[[nodiscard]] Graph dart();
}  // namespace families

}  // namespace rsc
