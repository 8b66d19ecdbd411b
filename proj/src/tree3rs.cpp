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

#include "rsc/tree3rs.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace rsc {

const char* to_string(BranchClass c) noexcept {
  static constexpr std::array<const char*, 6> names{"A", "B", "C", "D", "E", "F"};
  return names[static_cast<std::size_t>(c)];
}

const char* to_string(SubtreeClass c) noexcept {
  static constexpr std::array<const char*, 7> names{"I", "II", "III", "IV", "V", "VI", "VII"};
  return names[static_cast<std::size_t>(c)];
}

bool path_3rs_feasible(std::size_t n, int i, int j) {
  if (n < 2) throw InputError("path needs at least two vertices");
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) throw InputError("endpoint colours must be 0 or 1");
  switch (n) {
    case 2: return i != j;
    case 3: return !(i == 0 && j == 0);
    case 4: return i == j;
    case 6: return !(i == 0 && j == 0);
    default: return true;
  }
}

namespace {

using enum BranchClass;

// Rows: up-distance 1..10 (10 stands for >= 10). Columns: II..VII.
constexpr std::array<std::array<BranchClass, 6>, 10> kBranchTable{{
    {C, A, B, C, E, F},
    {D, B, E, F, F, F},
    {B, C, D, E, F, F},
    {E, D, F, F, F, F},
    {D, B, E, F, F, F},
    {F, E, F, F, F, F},
    {E, D, F, F, F, F},
    {F, F, F, F, F, F},
    {F, E, F, F, F, F},
    {F, F, F, F, F, F},
}};

}  // namespace

BranchClass branch_class_lookup(SubtreeClass subtree, std::size_t up_distance) {
  if (up_distance == 0) throw InputError("up-distance must be positive");
  if (subtree == SubtreeClass::I) return A;
  const std::size_t row = std::min<std::size_t>(up_distance, 10) - 1;
  return kBranchTable[row][static_cast<std::size_t>(subtree) - 1];
}

std::optional<SubtreeClass> subtree_class_from_state(int colour_v, std::size_t c_count, std::size_t e_count,
                                                     bool is_leaf) {
  if (colour_v == 0) return SubtreeClass::II;
  if (colour_v == 1) {
    const std::size_t ce = c_count + e_count;
    if (ce == 0) return SubtreeClass::IV;
    if (ce == 1) return SubtreeClass::III;
    return std::nullopt;
  }
  if (is_leaf) return SubtreeClass::VII;
  if (e_count == 0) return SubtreeClass::VI;
  if (e_count == 1) return SubtreeClass::V;
  return SubtreeClass::II;
}

bool try_to_colour(signed char& colour_v, int col) {
  if (colour_v == -1) {
    colour_v = static_cast<signed char>(col);
    return true;
  }
  return colour_v == col;
}

std::string TreeTestResult::describe() const {
  const std::string v = std::to_string(at + 1);
  switch (reason) {
    case Reason::none: return {};
    case Reason::class_a_branch: return "class A branch at vertex " + v;
    case Reason::class_i_subtree: return "class I subtree at " + v;
    case Reason::colour_conflict: return "colour conflict at " + v;
  }
  return {};
}

TreeTestResult test_3rs_tree(const RootedTree& t, std::vector<TraceStep>* trace) {
  const std::size_t n = t.num_vertices();
  if (n == 0 || t.num_children(t.root) < 3) throw InputError("tree must be rooted at a 3-plus vertex");

  TreeTestResult out;
  std::vector<signed char> colour(n, -1);
  std::vector<std::uint32_t> c_count(n, 0), e_count(n, 0);
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<VertexId> key_ancestor(n, kNoVertex);

  auto reject = [&](TreeTestResult::Reason why, VertexId v) {
    out.colourable = false;
    out.reason = why;
    out.at = v;
    return out;
  };

  // Iterative post-order: each frame is a vertex and the index of its next child.
  std::vector<std::pair<VertexId, std::uint32_t>> stack;
  stack.reserve(64);
  stack.emplace_back(t.root, 0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto kids = t.children(v);
    if (next < kids.size()) {
      const VertexId w = kids[next++];
      depth[w] = depth[v] + 1;
      key_ancestor[w] = (kids.size() >= 2) ? v : key_ancestor[v];
      stack.emplace_back(w, 0);
      continue;
    }
    const VertexId u = v;
    stack.pop_back();
    ++out.visits;
    if (kids.size() == 1) continue;

    std::optional<SubtreeClass> sc =
        subtree_class_from_state(colour[u], c_count[u], e_count[u], kids.empty());
    if (trace) trace->push_back({u, sc, std::nullopt, kNoVertex, 0});
    if (!sc) return reject(TreeTestResult::Reason::class_i_subtree, u);
    if (u == t.root) return out;

    const VertexId a = key_ancestor[u];
    const BranchClass bc = branch_class_lookup(*sc, depth[u] - depth[a]);
    if (trace) trace->push_back({u, std::nullopt, bc, a, depth[u] - depth[a]});
    switch (bc) {
      case A: return reject(TreeTestResult::Reason::class_a_branch, a);
      case B:
        if (!try_to_colour(colour[a], 0)) return reject(TreeTestResult::Reason::colour_conflict, a);
        break;
      case C:
        ++c_count[a];
        [[fallthrough]];
      case D:
        if (!try_to_colour(colour[a], 1)) return reject(TreeTestResult::Reason::colour_conflict, a);
        break;
      case E: ++e_count[a]; break;
      case F: break;
    }
  }
  return out;
}

TreeTestResult test_3rs_tree(const Graph& g) {
  if (g.max_degree() < 3) {
    if (!is_tree(g)) throw InputError("graph is not a tree");
    TreeTestResult out;
    out.visits = g.num_vertices();
    return out;
  }
  return test_3rs_tree(root_at_3plus(g));
}

}  // namespace rsc
