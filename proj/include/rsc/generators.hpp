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

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "rsc/constructions.hpp"
#include "rsc/graph.hpp"
#include "rsc/hessian.hpp"

namespace rsc::gen {

using Rng = std::mt19937_64;

/// Tree on n = code.size() + 2 vertices encoded by a Prüfer sequence.
[[nodiscard]] Graph prufer_decode(std::span<const VertexId> code, std::size_t n);

/// Calls visit(tree) for every labelled tree on n vertices (n^(n-2) of them).
void for_each_labelled_tree(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Uniform labelled tree.
[[nodiscard]] Graph random_tree(std::size_t n, Rng& rng);

/// A path of length `spine` (spine + 1 vertices) whose two ends each carry
/// `legs` pendants, plus optional extra pendants at random spine vertices.
[[nodiscard]] Graph caterpillar(std::size_t spine, std::size_t legs, std::size_t extra, Rng& rng);

/// Erdős–Rényi G(n, p).
[[nodiscard]] Graph gnp(std::size_t n, double p, Rng& rng);

/// Connected chordal graph built by repeatedly adding a vertex adjacent to a
/// random clique of the current graph (a new simplicial vertex).
[[nodiscard]] Graph random_chordal(std::size_t n, Rng& rng);

struct SplitInstance {
  Graph graph;
  SplitPartition partition;
};
[[nodiscard]] SplitInstance random_split(std::size_t n, Rng& rng);

struct CoBipartiteInstance {
  Graph graph;
  CoBipartitePartition partition;
};
[[nodiscard]] CoBipartiteInstance random_cobipartite(std::size_t n, Rng& rng);

/// Random graph with maximum degree exactly `delta` (needs n > delta).
[[nodiscard]] Graph random_max_degree(std::size_t n, std::size_t delta, Rng& rng);

struct PlantedCnf {
  PositiveCnf formula;
  std::vector<bool> assignment;  ///< exactly one true variable per clause
};
/// Positive 3-CNF with a planted exactly-one-true assignment in which every
/// variable occurs at most three times, so its gadget has maximum degree 3.
/// Throws InputError unless ceil(m/3) + ceil(2m/3) <= num_vars (m >= 1
/// clauses; m <= num_vars - 1 always fits).
[[nodiscard]] PlantedCnf random_planted_cnf(std::size_t num_vars, std::size_t num_clauses, Rng& rng);

/// Symmetric pattern with each off-diagonal pair present with probability p.
[[nodiscard]] SparsityPattern random_pattern(std::size_t n, double p, Rng& rng);

/// Values uniform in [-1, 1] on the diagonal and on the pattern, zero elsewhere.
[[nodiscard]] DenseMatrix random_symmetric(const SparsityPattern& p, Rng& rng);

}  // namespace rsc::gen
