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
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "rsc/colouring.hpp"
#include "rsc/graph.hpp"

namespace rsc {

/// Positive 3-CNF. Variables are 0-based; each clause lists three distinct
/// variables in the order they were given.
struct PositiveCnf {
  std::size_t num_vars = 0;
  std::vector<std::array<std::size_t, 3>> clauses;

  /// Throws InputError on a repeated or out-of-range variable.
  void validate() const;
  /// Every variable occurs in exactly three clauses.
  [[nodiscard]] bool is_cubic() const;
};

/// True when every clause has exactly one true variable.
[[nodiscard]] bool is_exactly_one_true(const PositiveCnf& f, const std::vector<bool>& assignment);

/// All exactly-one-true assignments, by exhaustive enumeration (num_vars <= 24).
[[nodiscard]] std::vector<std::vector<bool>> exactly_one_true_assignments(const PositiveCnf& f);

/// Gadget graph with the vertex names used in the reduction. Clause-side
/// indices (j, k) are 0-based; k runs over the three positions of clause j.
struct GadgetGraph {
  Graph graph;
  std::size_t s = 0;                                          ///< 0 for the basic gadget
  std::vector<VertexId> x;                                    ///< x[i]
  std::map<std::pair<std::size_t, std::size_t>, VertexId> y;  ///< (i, j): midpoint of x_i c_jk
  std::vector<std::array<VertexId, 3>> c;                     ///< c[j][k]
  std::vector<std::array<VertexId, 3>> b;                     ///< b[j][k]: last vertex before c[j][k+1]
  /// Side c[j][k] .. c[j][k+1] of the girth gadget: c, (p, q, a) for t in
  /// [0, s), b, c'. Keyed by (j, k, t).
  using SideKey = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::map<SideKey, VertexId> p;
  std::map<SideKey, VertexId> q;
  std::map<SideKey, VertexId> a;
  std::map<SideKey, VertexId> pendant;  ///< pendant of a^(t)

  /// "name vertex_1based" lines, e.g. "x_1 1", "c_2_3 17".
  [[nodiscard]] std::vector<std::pair<std::string, VertexId>> named_vertices() const;
};

/// s = 0 builds the basic gadget (clause triangles, every edge subdivided).
/// Even s >= 2 replaces each clause side by a path of length 3s + 2 with a
/// pendant at every a^(t), which pushes the girth to at least 2(3s + 2).
[[nodiscard]] GadgetGraph sat_to_graph(const PositiveCnf& f, std::size_t s = 0);

/// Forward colouring scheme for an exactly-one-true assignment.
[[nodiscard]] Colouring assignment_to_3rs_colouring(const PositiveCnf& f, const GadgetGraph& gg,
                                                    const std::vector<bool>& assignment);

struct AssignmentReadout {
  std::vector<bool> assignment;  ///< x_i true iff coloured 1
  /// The formula is not cubic, so exactly-one-true is not guaranteed.
  bool unguaranteed = false;
};

/// Reads the assignment back from a 3-rs colouring of the gadget graph.
[[nodiscard]] AssignmentReadout colouring_to_assignment(const PositiveCnf& f, const GadgetGraph& gg,
                                                        const Colouring& c);

/// Every component is a star K_{1,p}, p >= 0.
[[nodiscard]] bool decide_2_rs(const Graph& g);

/// Pads every vertex to degree max_degree + 1 with fresh pendants. Original
/// ids are kept; pendants are numbered in order of their host vertex.
[[nodiscard]] Graph g_plus(const Graph& g);

/// Colours 0 .. n-|I|-1 on the vertices outside I in index order and colour
/// n-|I| on I. Throws InputError if I is not independent.
[[nodiscard]] Colouring upper_bound_colouring(const Graph& g, std::span<const VertexId> independent_set);

struct SplitPartition {
  std::vector<VertexId> clique;
  std::vector<VertexId> independent;
};

/// Throws InputError unless p is a valid split partition of g.
void validate_split_partition(const Graph& g, const SplitPartition& p);

/// n - alpha + 1, alpha = max(|I|, 1 + max over v in C of |I \ N(v)|).
[[nodiscard]] int split_rs_chromatic(const Graph& g, const SplitPartition& p);

struct BlowUp {
  Graph graph;
  std::size_t delta = 0;
  std::map<Edge, std::vector<VertexId>> edge_vertices;  ///< uv -> e_1 .. e_{delta+1}
};

/// Replaces each edge uv by K_{2,delta+1} with parts {u, v} and fresh
/// vertices. Throws InputError on an edgeless graph.
[[nodiscard]] BlowUp edge_blowup(const Graph& g);

/// Proper k-colouring of g -> (k+1)-rs colouring of the blow-up, new vertices
/// coloured k.
[[nodiscard]] Colouring colouring_lift(const Graph& g, const BlowUp& bu, const Colouring& proper);

/// (k+1)-rs colouring of the blow-up -> proper k-colouring of g.
[[nodiscard]] Colouring rs_to_proper_extraction(const Graph& g, const BlowUp& bu, const Colouring& rs);

/// Greedy proper colouring in index order; uses at most max_degree + 1 colours.
[[nodiscard]] Colouring greedy_proper_colouring(const Graph& g);

struct CoBipartitePartition {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
};

/// Throws InputError unless both sides are cliques partitioning V(g).
void validate_cobipartite_partition(const Graph& g, const CoBipartitePartition& p);

/// Relabels a star colouring of a co-bipartite graph so that the size-two
/// classes come first; the result is an ordered colouring with the same k.
[[nodiscard]] Colouring star_to_ordered_cobipartite(const Graph& g, const CoBipartitePartition& p,
                                                    const Colouring& star);

/// Four variables, clauses {1,2,3}, {1,2,4}, {1,3,4}, {2,3,4} (1-based names);
/// it has no exactly-one-true assignment.
[[nodiscard]] PositiveCnf four_clause_formula();

}  // namespace rsc
