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

#include "rsc/constructions.hpp"

#include <algorithm>
#include <set>

namespace rsc {

void PositiveCnf::validate() const {
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const auto& cl = clauses[j];
    for (std::size_t k = 0; k < 3; ++k) {
      if (cl[k] >= num_vars) {
        throw InputError("clause " + std::to_string(j + 1) + ": variable out of range");
      }
    }
    if (cl[0] == cl[1] || cl[1] == cl[2] || cl[0] == cl[2]) {
      throw InputError("clause " + std::to_string(j + 1) + ": repeated variable");
    }
  }
}

bool PositiveCnf::is_cubic() const {
  std::vector<std::size_t> occ(num_vars, 0);
  for (const auto& cl : clauses)
    for (std::size_t v : cl) ++occ[v];
  return std::all_of(occ.begin(), occ.end(), [](std::size_t o) { return o == 3; });
}

bool is_exactly_one_true(const PositiveCnf& f, const std::vector<bool>& assignment) {
  if (assignment.size() != f.num_vars) throw InputError("assignment size mismatch");
  for (const auto& cl : f.clauses) {
    if (assignment[cl[0]] + assignment[cl[1]] + assignment[cl[2]] != 1) return false;
  }
  return true;
}

std::vector<std::vector<bool>> exactly_one_true_assignments(const PositiveCnf& f) {
  if (f.num_vars > 24) throw InputError("too many variables to enumerate");
  std::vector<std::vector<bool>> out;
  std::vector<bool> a(f.num_vars);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars); ++bits) {
    for (std::size_t i = 0; i < f.num_vars; ++i) a[i] = (bits >> i) & 1;
    if (is_exactly_one_true(f, a)) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<std::string, VertexId>> GadgetGraph::named_vertices() const {
  std::vector<std::pair<std::string, VertexId>> out;
  auto id = [](std::size_t i) { return std::to_string(i + 1); };
  for (std::size_t i = 0; i < x.size(); ++i) out.emplace_back("x_" + id(i), x[i]);
  for (const auto& [ij, v] : y) out.emplace_back("y_" + id(ij.first) + "_" + id(ij.second), v);
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      out.emplace_back("c_" + id(j) + "_" + id(k), c[j][k]);
      out.emplace_back("b_" + id(j) + "_" + id(k), b[j][k]);
    }
  }
  for (const auto& [prefix, names] : {std::pair{"p_", &p}, std::pair{"q_", &q}, std::pair{"a_", &a},
                                       std::pair{"l_", &pendant}}) {
    for (const auto& [jkt, v] : *names) {
      const auto [j, k, t] = jkt;
      out.emplace_back(prefix + id(j) + "_" + id(k) + "_" + id(t), v);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
  return out;
}

GadgetGraph sat_to_graph(const PositiveCnf& f, std::size_t s) {
  f.validate();
  if (s % 2 != 0) throw InputError("girth parameter s must be even");
  const std::size_t n = f.num_vars;
  const std::size_t m = f.clauses.size();
  GadgetGraph gg;
  gg.s = s;
  gg.c.resize(m);
  gg.b.resize(m);

  // Variables first, then the clause vertices c_jk.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) gg.x.push_back(static_cast<VertexId>(i));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      gg.c[j][k] = static_cast<VertexId>(n + 3 * j + k);
      edges.emplace_back(gg.x[f.clauses[j][k]], gg.c[j][k]);
    }
    if (s == 0) {
      for (std::size_t k = 0; k < 3; ++k) edges.emplace_back(gg.c[j][k], gg.c[j][(k + 1) % 3]);
    }
  }
  const Graph intermediate = Graph::from_edge_list(n + 3 * m, edges);
  Subdivision sub = subdivide_all_edges(intermediate);
  auto mid = [&](VertexId u, VertexId v) { return sub.midpoint.at({std::min(u, v), std::max(u, v)}); };
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      gg.y[{f.clauses[j][k], j}] = mid(gg.x[f.clauses[j][k]], gg.c[j][k]);
      if (s == 0) gg.b[j][k] = mid(gg.c[j][k], gg.c[j][(k + 1) % 3]);
    }
  }
  if (s == 0) {
    gg.graph = std::move(sub.graph);
    return gg;
  }

  // Each side c_jk .. c_j(k+1) becomes c, (p, q, a) x s, b, c' with a pendant on every a.
  edges = sub.graph.edges();
  auto next = static_cast<VertexId>(sub.graph.num_vertices());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      VertexId prev = gg.c[j][k];
      auto step = [&]() {
        const VertexId v = next++;
        edges.emplace_back(prev, v);
        prev = v;
        return v;
      };
      for (std::size_t t = 0; t < s; ++t) {
        gg.p[{j, k, t}] = step();
        gg.q[{j, k, t}] = step();
        const VertexId av = step();
        gg.a[{j, k, t}] = av;
        const VertexId leaf = next++;
        edges.emplace_back(av, leaf);
        gg.pendant[{j, k, t}] = leaf;
      }
      gg.b[j][k] = step();
      edges.emplace_back(prev, gg.c[j][(k + 1) % 3]);
    }
  }
  gg.graph = Graph::from_edge_list(next, edges);
  return gg;
}

Colouring assignment_to_3rs_colouring(const PositiveCnf& f, const GadgetGraph& gg,
                                      const std::vector<bool>& assignment) {
  if (!is_exactly_one_true(f, assignment)) throw InputError("assignment is not exactly-one-true");
  std::vector<Colour> col(gg.graph.num_vertices(), 2);
  for (std::size_t i = 0; i < f.num_vars; ++i) col[gg.x[i]] = assignment[i] ? 1 : 0;
  // Interior colours (p, q, a, b) of a side, by its offset from the 0-coloured c.
  static constexpr std::array<std::array<Colour, 4>, 3> kSide{{{2, 1, 0, 2}, {0, 2, 1, 0}, {2, 0, 1, 2}}};
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    std::size_t r = 0;
    while (!assignment[f.clauses[j][r]]) ++r;
    for (std::size_t k = 0; k < 3; ++k) {
      col[gg.c[j][k]] = k == r ? 0 : 1;
      const auto& pat = kSide[(k + 3 - r) % 3];
      for (std::size_t t = 0; t < gg.s; ++t) {
        col[gg.p.at({j, k, t})] = pat[0];
        col[gg.q.at({j, k, t})] = pat[1];
        col[gg.a.at({j, k, t})] = pat[2];
        col[gg.pendant.at({j, k, t})] = 2;
      }
      col[gg.b[j][k]] = pat[3];
    }
  }
  return Colouring(std::move(col), 3);
}

AssignmentReadout colouring_to_assignment(const PositiveCnf& f, const GadgetGraph& gg, const Colouring& c) {
  if (c.k() > 3 || !is_rs(gg.graph, c)) throw InputError("not a 3-rs colouring of the gadget graph");
  AssignmentReadout out;
  out.assignment.resize(f.num_vars);
  for (std::size_t i = 0; i < f.num_vars; ++i) out.assignment[i] = c[gg.x[i]] == 1;
  out.unguaranteed = !f.is_cubic();
  return out;
}

bool decide_2_rs(const Graph& g) {
  std::size_t count = 0;
  const auto label = connected_components(g, &count);
  std::vector<std::size_t> size(count, 0), edges(count, 0), top(count, 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    ++size[label[v]];
    edges[label[v]] += g.degree(v);
    top[label[v]] = std::max(top[label[v]], g.degree(v));
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (edges[i] / 2 + 1 != size[i]) return false;
    if (size[i] > 2 && top[i] != size[i] - 1) return false;
  }
  return true;
}

Graph g_plus(const Graph& g) {
  const std::size_t target = g.max_degree() + 1;
  std::vector<Edge> edges = g.edges();
  auto next = static_cast<VertexId>(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t i = g.degree(v); i < target; ++i) edges.emplace_back(v, next++);
  }
  return Graph::from_edge_list(next, edges);
}

Colouring upper_bound_colouring(const Graph& g, std::span<const VertexId> independent_set) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> in(n, false);
  for (VertexId v : independent_set) {
    if (v >= n) throw InputError("vertex out of range");
    if (in[v]) throw InputError("repeated vertex in independent set");
    in[v] = true;
  }
  for (VertexId v : independent_set) {
    for (VertexId w : g.neighbours(v)) {
      if (in[w]) throw InputError("set is not independent");
    }
  }
  const auto top = static_cast<Colour>(n - independent_set.size());
  std::vector<Colour> col(n);
  Colour next = 0;
  for (VertexId v = 0; v < n; ++v) col[v] = in[v] ? top : next++;
  return Colouring(std::move(col), top + 1);
}

void validate_split_partition(const Graph& g, const SplitPartition& p) {
  const std::size_t n = g.num_vertices();
  std::vector<int> side(n, -1);
  for (VertexId v : p.clique) {
    if (v >= n || side[v] != -1) throw InputError("split partition: bad or repeated vertex");
    side[v] = 0;
  }
  for (VertexId v : p.independent) {
    if (v >= n || side[v] != -1) throw InputError("split partition: bad or repeated vertex");
    side[v] = 1;
  }
  if (std::find(side.begin(), side.end(), -1) != side.end()) throw InputError("split partition misses a vertex");
  for (std::size_t i = 0; i < p.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < p.clique.size(); ++j) {
      if (!g.has_edge(p.clique[i], p.clique[j])) throw InputError("split partition: clique side has a non-edge");
    }
  }
  for (auto [u, v] : g.edges()) {
    if (side[u] == 1 && side[v] == 1) throw InputError("split partition: independent side has an edge");
  }
}

int split_rs_chromatic(const Graph& g, const SplitPartition& p) {
  validate_split_partition(g, p);
  std::size_t alpha = p.independent.size();
  for (VertexId v : p.clique) {
    std::size_t outside = 0;
    for (VertexId u : p.independent) outside += !g.has_edge(u, v);
    alpha = std::max(alpha, outside + 1);
  }
  return static_cast<int>(g.num_vertices() - alpha + 1);
}

BlowUp edge_blowup(const Graph& g) {
  if (g.num_edges() == 0) throw InputError("edge blow-up needs at least one edge");
  BlowUp bu;
  bu.delta = g.max_degree();
  std::vector<Edge> edges;
  auto next = static_cast<VertexId>(g.num_vertices());
  for (const Edge& e : g.edges()) {
    auto& fresh = bu.edge_vertices[e];
    for (std::size_t i = 0; i <= bu.delta; ++i) {
      fresh.push_back(next);
      edges.emplace_back(e.first, next);
      edges.emplace_back(e.second, next);
      ++next;
    }
  }
  bu.graph = Graph::from_edge_list(next, edges);
  return bu;
}

Colouring colouring_lift(const Graph& g, const BlowUp& bu, const Colouring& proper) {
  if (!is_proper(g, proper)) throw InputError("colouring to lift is not proper");
  const int k = proper.k();
  std::vector<Colour> col(bu.graph.num_vertices(), k);
  std::copy(proper.colours().begin(), proper.colours().end(), col.begin());
  return Colouring(std::move(col), k + 1);
}

Colouring greedy_proper_colouring(const Graph& g) {
  std::vector<Colour> col(g.num_vertices(), kUncoloured);
  std::vector<bool> taken;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    taken.assign(g.degree(v) + 1, false);
    for (VertexId w : g.neighbours(v)) {
      if (col[w] != kUncoloured && static_cast<std::size_t>(col[w]) < taken.size()) taken[col[w]] = true;
    }
    col[v] = static_cast<Colour>(std::find(taken.begin(), taken.end(), false) - taken.begin());
  }
  return Colouring::inferred(std::move(col));
}

Colouring rs_to_proper_extraction(const Graph& g, const BlowUp& bu, const Colouring& rs) {
  if (!is_rs(bu.graph, rs)) throw InputError("colouring of the blow-up is not rs");
  const int k = rs.k() - 1;
  if (k >= static_cast<int>(bu.delta) + 1) {
    const Colouring greedy = greedy_proper_colouring(g);
    return Colouring({greedy.colours().begin(), greedy.colours().end()}, k);
  }
  std::vector<Colour> col(rs.colours().begin(), rs.colours().begin() + static_cast<std::ptrdiff_t>(g.num_vertices()));
  // An isolated vertex of g keeps degree 0 in the blow-up and may sit on colour k.
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) col[v] = 0;
  }
  Colouring out(std::move(col), k);
  if (!is_proper(g, out)) throw std::logic_error("restriction is not proper");
  return out;
}

void validate_cobipartite_partition(const Graph& g, const CoBipartitePartition& p) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  for (const auto* side : {&p.a, &p.b}) {
    for (VertexId v : *side) {
      if (v >= n || seen[v]) throw InputError("co-bipartite partition: bad or repeated vertex");
      seen[v] = true;
    }
    for (std::size_t i = 0; i < side->size(); ++i) {
      for (std::size_t j = i + 1; j < side->size(); ++j) {
        if (!g.has_edge((*side)[i], (*side)[j])) throw InputError("co-bipartite partition: side is not a clique");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InputError("co-bipartite partition misses a vertex");
  }
}

Colouring star_to_ordered_cobipartite(const Graph& g, const CoBipartitePartition& p, const Colouring& star) {
  validate_cobipartite_partition(g, p);
  if (!is_star(g, star)) throw InputError("colouring is not a star colouring");
  const auto classes = star.classes();
  std::vector<Colour> relabel(classes.size());
  Colour next = 0;
  for (std::size_t size : {2, 1, 0}) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].size() > 2) throw InputError("colour class with three or more vertices");
      if (classes[c].size() == size) relabel[c] = next++;
    }
  }
  std::vector<Colour> col(star.size());
  for (VertexId v = 0; v < star.size(); ++v) col[v] = relabel[star[v]];
  return Colouring(std::move(col), star.k());
}

PositiveCnf four_clause_formula() {
  return PositiveCnf{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

}  // namespace rsc
