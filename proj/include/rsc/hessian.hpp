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
#include <span>
#include <vector>

#include "rsc/colouring.hpp"
#include "rsc/graph.hpp"

namespace rsc {

/// Off-diagonal nonzero structure of a symmetric n x n matrix. The diagonal
/// is always treated as present.
class SparsityPattern {
 public:
  SparsityPattern() = default;

  /// `entries` lists every stored (row, col) pair; (i, j) requires (j, i).
  /// Diagonal pairs are ignored. Throws InputError if asymmetric.
  static SparsityPattern from_entries(std::size_t n, std::span<const Edge> entries);
  /// One triangle only; the mirror image is implied.
  static SparsityPattern from_triangle(std::size_t n, std::span<const Edge> entries);

  [[nodiscard]] std::size_t dimension() const noexcept { return n_; }
  /// Pairs (i, j) with i < j, sorted.
  [[nodiscard]] const std::vector<Edge>& offdiag() const noexcept { return offdiag_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> offdiag_;
};

/// Row-major dense matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

[[nodiscard]] Graph pattern_to_graph(const SparsityPattern& p);

enum class GreedyOrder { natural, largest_degree_first };

/// Each vertex in turn gets the smallest colour c that no neighbour has, that
/// no coloured neighbour u above c already sees, and that no uncoloured
/// neighbour already sees. largest_degree_first breaks ties by lower index.
[[nodiscard]] Colouring greedy_rs_colouring(const Graph& g, GreedyOrder order = GreedyOrder::natural);

/// Same visiting order, smallest colour unused within distance two.
[[nodiscard]] Colouring greedy_distance_two_colouring(const Graph& g, GreedyOrder order = GreedyOrder::natural);

/// Column groups of an rs colouring of the pattern graph.
struct SeedGrouping {
  Colouring colouring;
  std::vector<std::vector<VertexId>> groups;  ///< colour -> columns
};

/// Throws InputError unless c is an rs colouring of the pattern graph.
[[nodiscard]] SeedGrouping make_seed_grouping(const SparsityPattern& p, const Colouring& c);

/// B = H S with one indicator column per colour: B[v][c] = sum of H[v][u]
/// over columns u of colour c. Throws InputError if h is not symmetric or has
/// a nonzero outside the pattern.
[[nodiscard]] DenseMatrix compress(const DenseMatrix& h, const SparsityPattern& p, const SeedGrouping& s);
/// Row-parallel version; identical output.
[[nodiscard]] DenseMatrix compress_parallel(const DenseMatrix& h, const SparsityPattern& p,
                                            const SeedGrouping& s, int threads = 0);

/// Direct recovery: H[v][v] = B[v][c(v)], and for an edge uv with
/// c(u) < c(v), H[u][v] = H[v][u] = B[v][c(u)].
[[nodiscard]] DenseMatrix recover(const DenseMatrix& b, const SparsityPattern& p, const SeedGrouping& s);
[[nodiscard]] DenseMatrix recover_parallel(const DenseMatrix& b, const SparsityPattern& p,
                                           const SeedGrouping& s, int threads = 0);

/// Throws InputError unless h is square, symmetric and zero off the pattern.
void check_conforms(const DenseMatrix& h, const SparsityPattern& p);

}  // namespace rsc
