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
#include <string>
#include <vector>

#include "rsc/graph.hpp"

namespace rsc {

enum class BranchClass { A, B, C, D, E, F };
enum class SubtreeClass { I, II, III, IV, V, VI, VII };

[[nodiscard]] const char* to_string(BranchClass c) noexcept;
[[nodiscard]] const char* to_string(SubtreeClass c) noexcept;

/// Whether the path on n vertices has a 3-rs colouring whose endpoints get
/// colours i and j (both in {0,1}). Throws InputError for n < 2 or bad colours.
[[nodiscard]] bool path_3rs_feasible(std::size_t n, int i, int j);

/// Class of the branch made of a rooted subtree of class `subtree` and a path
/// of length `up_distance` (>= 1). Rows past 10 repeat row 10.
[[nodiscard]] BranchClass branch_class_lookup(SubtreeClass subtree, std::size_t up_distance);

/// Class of T_v from v's colour (-1, 0 or 1) and its counts of class C and E
/// branches. nullopt means class I, i.e. reject.
[[nodiscard]] std::optional<SubtreeClass> subtree_class_from_state(int colour_v, std::size_t c_count,
                                                                   std::size_t e_count, bool is_leaf);

/// Sets colour[v] to col if unset. Returns false on a conflicting colour.
[[nodiscard]] bool try_to_colour(signed char& colour_v, int col);

struct TreeTestResult {
  enum class Reason { none, class_a_branch, class_i_subtree, colour_conflict };

  bool colourable = true;
  Reason reason = Reason::none;
  VertexId at = kNoVertex;  ///< 3-plus vertex where the rejection happened
  std::size_t visits = 0;   ///< vertices finished by the traversal

  /// "class A branch at vertex v" and so on (1-based v); empty when colourable.
  [[nodiscard]] std::string describe() const;
};

/// One classification made by the traversal, in the order it happened.
struct TraceStep {
  VertexId vertex;                      ///< root of the subtree, or the lower end u of the branch
  std::optional<SubtreeClass> subtree;  ///< set for a subtree step (nullopt + !branch: class I)
  std::optional<BranchClass> branch;    ///< set for a branch step
  VertexId at = kNoVertex;              ///< branch steps: the 3-plus vertex the branch hangs from
  std::size_t up_distance = 0;
};

/// Decides 3-rs colourability of a tree rooted at a 3-plus vertex.
/// Throws InputError if the root has degree below 3.
[[nodiscard]] TreeTestResult test_3rs_tree(const RootedTree& t, std::vector<TraceStep>* trace = nullptr);

/// Same for an unrooted tree. Paths (no 3-plus vertex) are always colourable.
/// Throws InputError if g is not a tree.
[[nodiscard]] TreeTestResult test_3rs_tree(const Graph& g);

}  // namespace rsc
