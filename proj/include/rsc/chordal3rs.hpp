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

#include <cstddef>
#include <optional>
#include <vector>

#include "rsc/graph.hpp"
#include "rsc/tree3rs.hpp"

namespace rsc {

struct TriangleKind {
  enum class Type { type_i, type_ii };
  Type type;
  VertexId low_degree_vertex = kNoVertex;  ///< degree-2 vertex for type II
};

/// Type I when all three vertices are 3-plus; otherwise type II with the
/// minimum-degree vertex (lowest index on ties). Throws if t is not a triangle.
[[nodiscard]] TriangleKind classify_triangle(const Graph& g, const Triangle& t);

/// G - w plus two fresh pendants at each of the other two triangle vertices.
/// Fresh vertices take the indices n-1 .. n+2 after w's slot is closed up,
/// so vertices above w shift down by one.
[[nodiscard]] Graph eliminate_type2_triangle(const Graph& g, const Triangle& t, VertexId w);

struct ChordalTestResult {
  bool colourable = true;
  std::size_t eliminations = 0;
  /// Triangle count of the component under work before each round.
  std::vector<std::size_t> triangle_counts;
  std::optional<Triangle> type_i;       ///< type-I triangle that forced NO, in ids of g
  std::optional<TreeTestResult> tree;   ///< last tree verdict; its vertex is an id of g
  Graph final_forest;                   ///< union of the trees reached (only if keep_forest)
};

struct ChordalTestOptions {
  bool keep_forest = false;
  /// Re-run the chordality check after each elimination.
  bool check_each_step = false;
};

/// Decides 3-rs colourability of a chordal graph, one component at a time.
/// Throws InputError if g is not chordal.
[[nodiscard]] ChordalTestResult test_3rs_chordal(const Graph& g, const ChordalTestOptions& options = {});

}  // namespace rsc
