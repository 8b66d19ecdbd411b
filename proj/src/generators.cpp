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

#include "rsc/generators.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

namespace rsc::gen {

Graph prufer_decode(std::span<const VertexId> code, std::size_t n) {
  if (n < 2 || code.size() + 2 != n) throw InputError("Prüfer code length must be n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (VertexId v : code) {
    if (v >= n) throw InputError("Prüfer code entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Linear-time decoding: `leaf` is the smallest current leaf.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  VertexId leaf = static_cast<VertexId>(ptr);
  for (VertexId v : code) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = static_cast<VertexId>(ptr);
    }
  }
  edges.emplace_back(leaf, static_cast<VertexId>(n - 1));
  return Graph::from_edge_list(n, edges);
}

void for_each_labelled_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n == 0) return;
  if (n == 1) {
    visit(Graph::from_edge_list(1, {}));
    return;
  }
  std::vector<VertexId> code(n - 2, 0);
  for (;;) {
    visit(prufer_decode(code, n));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) return;
  }
}

Graph random_tree(std::size_t n, Rng& rng) {
  if (n <= 1) return Graph::from_edge_list(n, {});
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<VertexId> code(n - 2);
  for (auto& v : code) v = pick(rng);
  return prufer_decode(code, n);
}

Graph caterpillar(std::size_t spine, std::size_t legs, std::size_t extra, Rng& rng) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < spine; ++v) edges.emplace_back(v, v + 1);
  auto next = static_cast<VertexId>(spine + 1);
  for (VertexId end : {VertexId{0}, static_cast<VertexId>(spine)}) {
    for (std::size_t i = 0; i < legs; ++i) edges.emplace_back(end, next++);
  }
  if (spine >= 2) {
    std::uniform_int_distribution<VertexId> inner(1, static_cast<VertexId>(spine - 1));
    for (std::size_t i = 0; i < extra; ++i) edges.emplace_back(inner(rng), next++);
  }
  return Graph::from_edge_list(next, edges);
}

Graph gnp(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph random_chordal(std::size_t n, Rng& rng) {
  std::vector<std::vector<VertexId>> adj(n);
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) {
    // Grow a random clique from a random earlier vertex, keeping it small so
    // that degree-two vertices stay common.
    std::uniform_int_distribution<VertexId> pick(0, v - 1);
    std::vector<VertexId> clique{pick(rng)};
    std::uniform_int_distribution<int> extra(0, 2);
    for (int want = extra(rng); want > 0; --want) {
      std::vector<VertexId> cand;
      for (VertexId w : adj[clique.front()]) {
        if (std::find(clique.begin(), clique.end(), w) != clique.end()) continue;
        bool all = true;
        for (VertexId c : clique) {
          if (std::find(adj[c].begin(), adj[c].end(), w) == adj[c].end()) all = false;
        }
        if (all) cand.push_back(w);
      }
      if (cand.empty()) break;
      clique.push_back(cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)]);
    }
    for (VertexId c : clique) {
      adj[c].push_back(v);
      adj[v].push_back(c);
      edges.emplace_back(c, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

SplitInstance random_split(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> csize(1, std::max<std::size_t>(1, n - 1));
  const std::size_t k = std::min(n, csize(rng));
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  SplitInstance out;
  out.partition.clique.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
  out.partition.independent.assign(perm.begin() + static_cast<std::ptrdiff_t>(k), perm.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) edges.emplace_back(perm[i], perm[j]);
  std::bernoulli_distribution coin(0.4);
  for (VertexId u : out.partition.independent)
    for (VertexId c : out.partition.clique)
      if (coin(rng)) edges.emplace_back(u, c);
  std::sort(out.partition.clique.begin(), out.partition.clique.end());
  std::sort(out.partition.independent.begin(), out.partition.independent.end());
  out.graph = Graph::from_edge_list(n, edges);
  return out;
}

CoBipartiteInstance random_cobipartite(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> asize(0, n);
  const std::size_t k = asize(rng);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  CoBipartiteInstance out;
  out.partition.a.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
  out.partition.b.assign(perm.begin() + static_cast<std::ptrdiff_t>(k), perm.end());
  std::vector<Edge> edges;
  for (const auto* side : {&out.partition.a, &out.partition.b})
    for (std::size_t i = 0; i < side->size(); ++i)
      for (std::size_t j = i + 1; j < side->size(); ++j) edges.emplace_back((*side)[i], (*side)[j]);
  std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.0, 0.6)(rng));
  for (VertexId u : out.partition.a)
    for (VertexId v : out.partition.b)
      if (coin(rng)) edges.emplace_back(u, v);
  std::sort(out.partition.a.begin(), out.partition.a.end());
  std::sort(out.partition.b.begin(), out.partition.b.end());
  out.graph = Graph::from_edge_list(n, edges);
  return out;
}

Graph random_max_degree(std::size_t n, std::size_t delta, Rng& rng) {
  if (n <= delta) throw InputError("need more vertices than the degree bound");
  for (;;) {
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<std::size_t> deg(n, 0);
    std::vector<Edge> edges;
    const std::size_t target = std::uniform_int_distribution<std::size_t>(n / 2, n * delta / 2)(rng);
    for (auto [u, v] : pairs) {
      if (edges.size() >= target) break;
      if (deg[u] < delta && deg[v] < delta) {
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
      }
    }
    Graph g = Graph::from_edge_list(n, edges);
    if (g.max_degree() == delta) return g;
  }
}

PlantedCnf random_planted_cnf(std::size_t num_vars, std::size_t num_clauses, Rng& rng) {
  // Each clause takes one true and two false variables, each variable at most
  // three times.
  const std::size_t need_true = std::max<std::size_t>(1, (num_clauses + 2) / 3);
  const std::size_t need_false = std::max<std::size_t>(2, (2 * num_clauses + 2) / 3);
  if (need_true + need_false > num_vars) {
    throw InputError("too many clauses for " + std::to_string(num_vars) + " variables");
  }
  PlantedCnf out;
  out.formula.num_vars = num_vars;
  std::vector<std::size_t> perm(num_vars);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  out.assignment.assign(num_vars, false);
  std::bernoulli_distribution coin(0.3);
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (i < need_true) out.assignment[perm[i]] = true;
    else if (i >= need_true + need_false) out.assignment[perm[i]] = coin(rng);
  }
  std::vector<std::size_t> truthy, falsy;
  for (std::size_t v = 0; v < num_vars; ++v) (out.assignment[v] ? truthy : falsy).push_back(v);
  std::vector<int> left(num_vars, 3);
  std::vector<std::uint64_t> key(num_vars);
  for (std::size_t j = 0; j < num_clauses; ++j) {
    for (auto& k : key) k = rng();
    // Most spare capacity first, ties at random: this never runs dry.
    auto by_room = [&](std::size_t a, std::size_t b) {
      return left[a] != left[b] ? left[a] > left[b] : key[a] < key[b];
    };
    std::sort(truthy.begin(), truthy.end(), by_room);
    std::sort(falsy.begin(), falsy.end(), by_room);
    std::array<std::size_t, 3> cl{truthy[0], falsy[0], falsy[1]};
    for (std::size_t v : cl) --left[v];
    std::shuffle(cl.begin(), cl.end(), rng);
    out.formula.clauses.push_back(cl);
  }
  return out;
}

SparsityPattern random_pattern(std::size_t n, double p, Rng& rng) {
  const Graph g = gnp(n, p, rng);
  const auto e = g.edges();
  return SparsityPattern::from_triangle(n, e);
}

DenseMatrix random_symmetric(const SparsityPattern& p, Rng& rng) {
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  DenseMatrix h(p.dimension(), p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i) h(i, i) = val(rng);
  for (auto [i, j] : p.offdiag()) h(i, j) = h(j, i) = val(rng);
  return h;
}

}  // namespace rsc::gen
