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

#include "rsc/hessian.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace rsc {

SparsityPattern SparsityPattern::from_entries(std::size_t n, std::span<const Edge> entries) {
  std::vector<Edge> upper, lower;
  for (auto [i, j] : entries) {
    if (i >= n || j >= n) throw InputError("pattern entry out of range");
    if (i < j) upper.emplace_back(i, j);
    else if (j < i) lower.emplace_back(j, i);
  }
  std::sort(upper.begin(), upper.end());
  upper.erase(std::unique(upper.begin(), upper.end()), upper.end());
  std::sort(lower.begin(), lower.end());
  lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
  if (upper != lower) throw InputError("pattern is not symmetric");
  SparsityPattern p;
  p.n_ = n;
  p.offdiag_ = std::move(upper);
  return p;
}

SparsityPattern SparsityPattern::from_triangle(std::size_t n, std::span<const Edge> entries) {
  std::vector<Edge> both(entries.begin(), entries.end());
  for (auto [i, j] : entries) both.emplace_back(j, i);
  return from_entries(n, both);
}

Graph pattern_to_graph(const SparsityPattern& p) { return Graph::from_edge_list(p.dimension(), p.offdiag()); }

namespace {

std::vector<VertexId> visiting_order(const Graph& g, GreedyOrder order) {
  std::vector<VertexId> vs(g.num_vertices());
  std::iota(vs.begin(), vs.end(), VertexId{0});
  if (order == GreedyOrder::largest_degree_first) {
    std::stable_sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  }
  return vs;
}

// Scratch set of colours with O(touched) reset.
class ColourMarks {
 public:
  explicit ColourMarks(std::size_t n) : count_(n + 1, 0) {}
  void add(Colour c) {
    if (count_[c]++ == 0) touched_.push_back(c);
  }
  void clear() {
    for (Colour c : touched_) count_[c] = 0;
    touched_.clear();
  }
  [[nodiscard]] Colour smallest_free(Colour limit) const {
    Colour c = 0;
    while (c < limit && count_[c] > 0) ++c;
    return c;
  }

 private:
  std::vector<int> count_;
  std::vector<Colour> touched_;
};

}  // namespace

Colouring greedy_rs_colouring(const Graph& g, GreedyOrder order) {
  const std::size_t n = g.num_vertices();
  std::vector<Colour> col(n, kUncoloured);
  ColourMarks banned(n);
  for (VertexId v : visiting_order(g, order)) {
    for (VertexId u : g.neighbours(v)) {
      if (col[u] != kUncoloured) {
        banned.add(col[u]);
        // u sits above v for every colour below col[u]: it must not see one twice.
        for (VertexId w : g.neighbours(u)) {
          if (col[w] != kUncoloured && col[w] < col[u]) banned.add(col[w]);
        }
      } else {
        // Keep the coloured neighbours of every uncoloured vertex distinct, so
        // the lower-neighbour condition never blocks a later vertex.
        for (VertexId w : g.neighbours(u)) {
          if (col[w] != kUncoloured) banned.add(col[w]);
        }
      }
    }
    col[v] = banned.smallest_free(static_cast<Colour>(n));
    banned.clear();
  }
  return Colouring::inferred(std::move(col));
}

Colouring greedy_distance_two_colouring(const Graph& g, GreedyOrder order) {
  const std::size_t n = g.num_vertices();
  std::vector<Colour> col(n, kUncoloured);
  ColourMarks banned(n);
  for (VertexId v : visiting_order(g, order)) {
    for (VertexId u : g.neighbours(v)) {
      if (col[u] != kUncoloured) banned.add(col[u]);
      for (VertexId w : g.neighbours(u)) {
        if (w != v && col[w] != kUncoloured) banned.add(col[w]);
      }
    }
    col[v] = banned.smallest_free(static_cast<Colour>(n));
    banned.clear();
  }
  return Colouring::inferred(std::move(col));
}

SeedGrouping make_seed_grouping(const SparsityPattern& p, const Colouring& c) {
  const Graph g = pattern_to_graph(p);
  if (c.size() != p.dimension()) throw InputError("grouping size does not match the pattern");
  if (!is_rs(g, c)) throw InputError("grouping is not an rs colouring of the pattern graph");
  return SeedGrouping{c, c.classes()};
}

void check_conforms(const DenseMatrix& h, const SparsityPattern& p) {
  const std::size_t n = p.dimension();
  if (h.rows != n || h.cols != n) throw InputError("matrix shape does not match the pattern");
  const Graph g = pattern_to_graph(p);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (h(i, j) != h(j, i)) throw InputError("matrix is not symmetric");
      if (h(i, j) != 0.0 && !g.has_edge(i, j)) throw InputError("nonzero outside the pattern");
    }
  }
}

namespace {

void check_grouping(const SparsityPattern& p, const SeedGrouping& s) {
  if (s.colouring.size() != p.dimension()) throw InputError("grouping size does not match the pattern");
}

}  // namespace

DenseMatrix compress(const DenseMatrix& h, const SparsityPattern& p, const SeedGrouping& s) {
  check_conforms(h, p);
  check_grouping(p, s);
  const std::size_t n = p.dimension();
  DenseMatrix b(n, static_cast<std::size_t>(s.colouring.k()));
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u = 0; u < n; ++u) b(v, s.colouring[u]) += h(v, u);
  }
  return b;
}

DenseMatrix compress_parallel(const DenseMatrix& h, const SparsityPattern& p, const SeedGrouping& s,
                              int threads) {
  check_conforms(h, p);
  check_grouping(p, s);
  const Graph g = pattern_to_graph(p);
  const auto n = static_cast<std::int64_t>(p.dimension());
  DenseMatrix b(p.dimension(), static_cast<std::size_t>(s.colouring.k()));
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<VertexId>(vi);
    // Same summation order as the dense loop: ascending column, diagonal in place.
    bool diagonal_done = false;
    for (VertexId u : g.neighbours(v)) {
      if (!diagonal_done && u > v) {
        b(v, s.colouring[v]) += h(v, v);
        diagonal_done = true;
      }
      b(v, s.colouring[u]) += h(v, u);
    }
    if (!diagonal_done) b(v, s.colouring[v]) += h(v, v);
  }
  return b;
}

DenseMatrix recover(const DenseMatrix& b, const SparsityPattern& p, const SeedGrouping& s) {
  check_grouping(p, s);
  const std::size_t n = p.dimension();
  const auto& c = s.colouring;
  if (b.rows != n || b.cols != static_cast<std::size_t>(c.k())) throw InputError("compressed matrix shape mismatch");
  if (!is_rs(pattern_to_graph(p), c)) throw InputError("grouping is not an rs colouring of the pattern graph");
  DenseMatrix h(n, n);
  for (VertexId v = 0; v < n; ++v) h(v, v) = b(v, c[v]);
  for (auto [u, v] : p.offdiag()) {
    const VertexId lo = c[u] < c[v] ? u : v;
    const VertexId hi = lo == u ? v : u;
    h(u, v) = h(v, u) = b(hi, c[lo]);
  }
  return h;
}

DenseMatrix recover_parallel(const DenseMatrix& b, const SparsityPattern& p, const SeedGrouping& s,
                             int threads) {
  check_grouping(p, s);
  const Graph g = pattern_to_graph(p);
  const auto& c = s.colouring;
  const std::size_t n = p.dimension();
  if (b.rows != n || b.cols != static_cast<std::size_t>(c.k())) throw InputError("compressed matrix shape mismatch");
  if (!is_rs(g, c)) throw InputError("grouping is not an rs colouring of the pattern graph");
  DenseMatrix h(n, n);
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(n); ++vi) {
    const auto v = static_cast<VertexId>(vi);
    h(v, v) = b(v, c[v]);
    for (VertexId u : g.neighbours(v)) h(v, u) = c[u] < c[v] ? b(v, c[u]) : b(u, c[v]);
  }
  return h;
}

}  // namespace rsc
