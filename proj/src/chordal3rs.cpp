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

#include "rsc/chordal3rs.hpp"

#include <algorithm>
#include <cassert>

namespace rsc {

TriangleKind classify_triangle(const Graph& g, const Triangle& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (t[i] >= g.num_vertices()) throw InputError("triangle vertex out of range");
  }
  if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2])) {
    throw InputError("not a triangle");
  }
  VertexId low = t[0];
  for (VertexId v : t) {
    if (g.degree(v) < g.degree(low) || (g.degree(v) == g.degree(low) && v < low)) low = v;
  }
  if (g.degree(low) >= 3) return {TriangleKind::Type::type_i, kNoVertex};
  return {TriangleKind::Type::type_ii, low};
}

Graph eliminate_type2_triangle(const Graph& g, const Triangle& t, VertexId w) {
  if (std::find(t.begin(), t.end(), w) == t.end()) throw InputError("vertex not on the triangle");
  if (classify_triangle(g, t).type != TriangleKind::Type::type_ii || g.degree(w) != 2) {
    throw InputError("eliminated vertex must have degree two");
  }
  const std::size_t n = g.num_vertices();
  auto shift = [w](VertexId v) { return v > w ? v - 1 : v; };
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() + 2);
  for (auto [a, b] : g.edges()) {
    if (a != w && b != w) edges.emplace_back(shift(a), shift(b));
  }
  auto next = static_cast<VertexId>(n - 1);
  for (VertexId v : g.neighbours(w)) {
    for (int i = 0; i < 2; ++i) edges.emplace_back(shift(v), next++);
  }
  return Graph::from_edge_list(n + 3, edges);
}

ChordalTestResult test_3rs_chordal(const Graph& g, const ChordalTestOptions& options) {
  if (!is_chordal(g)) throw InputError("graph is not chordal");
  ChordalTestResult out;
  std::size_t num_comp = 0;
  const auto label = connected_components(g, &num_comp);
  std::vector<std::vector<VertexId>> members(num_comp);
  for (VertexId v = 0; v < g.num_vertices(); ++v) members[label[v]].push_back(v);

  for (const auto& comp : members) {
    Graph h = induced_subgraph(g, comp);
    // origin[v]: vertex of g behind working vertex v, kNoVertex for pendants.
    std::vector<VertexId> origin = comp;
    for (;;) {
      const auto triangles = list_triangles(h);
      if (triangles.empty()) break;
      out.triangle_counts.push_back(triangles.size());
      std::optional<Triangle> pick;
      VertexId w = kNoVertex;
      for (const Triangle& t : triangles) {
        const TriangleKind kind = classify_triangle(h, t);
        if (kind.type == TriangleKind::Type::type_i) {
          out.colourable = false;
          out.type_i = Triangle{origin[t[0]], origin[t[1]], origin[t[2]]};
          return out;
        }
        if (!pick) {
          pick = t;
          w = kind.low_degree_vertex;
        }
      }
      h = eliminate_type2_triangle(h, *pick, w);
      origin.erase(origin.begin() + w);
      origin.insert(origin.end(), 4, kNoVertex);
      ++out.eliminations;
      if (options.check_each_step && !is_chordal(h)) throw std::logic_error("elimination broke chordality");
    }
    TreeTestResult tr = test_3rs_tree(h);
    if (!tr.colourable && tr.at != kNoVertex) tr.at = origin[tr.at];
    out.tree = tr;
    if (options.keep_forest) out.final_forest = disjoint_union(out.final_forest, h);
    if (!tr.colourable) {
      out.colourable = false;
      return out;
    }
  }
  return out;
}

}  // namespace rsc
