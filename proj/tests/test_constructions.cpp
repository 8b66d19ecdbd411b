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

#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rsc/constructions.hpp"
#include "rsc/exact_solver.hpp"
#include "rsc/generators.hpp"
#include "test_util.hpp"

using namespace rsc;

namespace {

PositiveCnf cnf(std::size_t vars, std::vector<std::array<std::size_t, 3>> clauses) {
  PositiveCnf f;
  f.num_vars = vars;
  f.clauses = std::move(clauses);
  return f;
}

// Cubic; the exactly-one-true assignments make x4 and one of x1, x2 true.
PositiveCnf cubic_six() { return cnf(6, {{0, 1, 2}, {0, 3, 4}, {0, 4, 5}, {1, 2, 3}, {1, 2, 5}, {3, 4, 5}}); }

void check_structure(const GadgetGraph& gg, std::size_t min_girth) {
  const Graph& g = gg.graph;
  CHECK(is_bipartite(g));
  CHECK(g.max_degree() <= 3);
  CHECK(girth(g) >= min_girth);
  CHECK(is_2_degenerate(g));
  const auto names = gg.named_vertices();
  CHECK(names.size() == g.num_vertices());
  std::set<std::string> distinct;
  std::set<VertexId> ids;
  for (const auto& [name, v] : names) {
    distinct.insert(name);
    ids.insert(v);
  }
  CHECK(distinct.size() == names.size());
  CHECK(ids.size() == names.size());
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("formulas") {
  CHECK_THROWS_AS(cnf(3, {{0, 1, 1}}).validate(), InputError);
  CHECK_THROWS_AS(cnf(3, {{0, 1, 3}}).validate(), InputError);
  CHECK(four_clause_formula().is_cubic());
  CHECK(cubic_six().is_cubic());
  CHECK_FALSE(cnf(3, {{0, 1, 2}}).is_cubic());
  CHECK(exactly_one_true_assignments(four_clause_formula()).empty());
  CHECK(exactly_one_true_assignments(cnf(3, {{0, 1, 2}})).size() == 3);

  const auto sols = exactly_one_true_assignments(cubic_six());
  CHECK(sols.size() == 2);
  for (const auto& a : sols) {
    CHECK(is_exactly_one_true(cubic_six(), a));
    CHECK(a[4]);
    CHECK(a[1] != a[2]);
  }
}

TEST_CASE("single clause gadget") {
  const PositiveCnf f = cnf(3, {{0, 1, 2}});
  const GadgetGraph gg = sat_to_graph(f);
  CHECK(gg.graph.num_vertices() == 12);
  CHECK(gg.graph.num_edges() == 12);
  check_structure(gg, 6);
  for (std::size_t t = 0; t < 3; ++t) {
    std::vector<bool> a(3, false);
    a[t] = true;
    const Colouring c = assignment_to_3rs_colouring(f, gg, a);
    CHECK(oracle::rs(oracle::adjacency(gg.graph), testutil::values(c)));
    const AssignmentReadout back = colouring_to_assignment(f, gg, c);
    CHECK(back.assignment == a);
    CHECK(back.unguaranteed);
  }
}

TEST_CASE("four clause gadget sizes") {
  const GadgetGraph basic = sat_to_graph(four_clause_formula());
  CHECK(basic.graph.num_vertices() == 40);
  CHECK(basic.graph.num_edges() == 48);
  check_structure(basic, 6);
  const GadgetGraph wide = sat_to_graph(four_clause_formula(), 2);
  CHECK(wide.graph.num_vertices() == 136);
  CHECK(girth(wide.graph) >= 16);
  check_structure(wide, 16);
  CHECK_THROWS_AS((void)sat_to_graph(four_clause_formula(), 3), InputError);
}

TEST_CASE("planted assignments colour both gadgets") {
  gen::Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = gen::random_planted_cnf(3 + trial % 5, 1 + trial % (2 + trial % 5), rng);
    REQUIRE(is_exactly_one_true(p.formula, p.assignment));
    for (std::size_t s : {std::size_t{0}, std::size_t{2}}) {
      const GadgetGraph gg = sat_to_graph(p.formula, s);
      check_structure(gg, s == 0 ? 6 : 16);
      const Colouring c = assignment_to_3rs_colouring(p.formula, gg, p.assignment);
      CHECK(c.k() == 3);
      CHECK(oracle::rs(oracle::adjacency(gg.graph), testutil::values(c)));
      CHECK(colouring_to_assignment(p.formula, gg, c).assignment == p.assignment);
    }
  }
}

TEST_CASE("any 3-rs colouring of a cubic gadget reads back as a solution") {
  const PositiveCnf f = cubic_six();
  for (std::size_t s : {std::size_t{0}, std::size_t{2}}) {
    const GadgetGraph gg = sat_to_graph(f, s);
    const SolveResult r = decide_k_rs(gg.graph, 3);
    REQUIRE(r.verdict == Verdict::yes);
    const AssignmentReadout back = colouring_to_assignment(f, gg, *r.witness);
    CHECK_FALSE(back.unguaranteed);
    CHECK(is_exactly_one_true(f, back.assignment));
  }
}

TEST_CASE("2-rs colourability") {
  gen::Rng rng(62);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = gen::gnp(1 + trial % 8, 0.25, rng);
    CHECK(decide_2_rs(g) == oracle::find_colouring(g, 2, oracle::rs).has_value());
  }
}

TEST_CASE("padding to degree delta + 1") {
  gen::Rng rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = gen::random_max_degree(4 + trial % 4, 2 + trial % 2, rng);
    const Graph p = g_plus(g);
    const std::size_t d = g.max_degree();
    for (VertexId v = 0; v < g.num_vertices(); ++v) CHECK(p.degree(v) == d + 1);
    for (VertexId v = static_cast<VertexId>(g.num_vertices()); v < p.num_vertices(); ++v) CHECK(p.degree(v) == 1);
    for (auto [u, v] : g.edges()) CHECK(p.has_edge(u, v));
    if (trial % 4 == 0) {
      const auto k = static_cast<int>(d);
      CHECK(oracle::find_colouring(g, k, oracle::rs).has_value() == (decide_k_rs(p, k + 1).verdict == Verdict::yes));
    }
  }
}

TEST_CASE("upper bound colouring") {
  gen::Rng rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = gen::gnp(2 + trial % 8, 0.3, rng);
    std::vector<VertexId> indep;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      bool free = true;
      for (VertexId u : indep) free = free && !g.has_edge(u, v);
      if (free && rng() % 2) indep.push_back(v);
    }
    const Colouring c = upper_bound_colouring(g, indep);
    CHECK(c.k() == static_cast<int>(g.num_vertices() - indep.size() + 1));
    CHECK(oracle::rs(oracle::adjacency(g), testutil::values(c)));
  }
  const std::vector<VertexId> bad{0, 1};
  CHECK_THROWS_AS((void)upper_bound_colouring(families::path(3), bad), InputError);
}

TEST_CASE("split graphs") {
  gen::Rng rng(65);
  for (int trial = 0; trial < 80; ++trial) {
    const auto inst = gen::random_split(2 + trial % 5, rng);
    validate_split_partition(inst.graph, inst.partition);
    CHECK(split_rs_chromatic(inst.graph, inst.partition) == oracle::chromatic(inst.graph, oracle::rs));
  }
  SplitPartition wrong{{0, 2}, {1}};
  CHECK_THROWS_AS(validate_split_partition(families::path(3), wrong), InputError);
}

TEST_CASE("edge blow-up") {
  const Graph g = families::path(3);
  const BlowUp bu = edge_blowup(g);
  CHECK(bu.delta == 2);
  CHECK(bu.graph.num_vertices() == 3 + 2 * 3);
  CHECK(bu.graph.num_edges() == 2 * 2 * 3);
  CHECK_FALSE(bu.graph.has_edge(0, 1));
  for (VertexId e : bu.edge_vertices.at({0, 1})) CHECK((bu.graph.has_edge(e, 0) && bu.graph.has_edge(e, 1)));

  const Colouring lifted = colouring_lift(g, bu, Colouring({0, 1, 0}, 2));
  CHECK(lifted.k() == 3);
  const auto a = oracle::adjacency(bu.graph);
  CHECK(oracle::rs(a, testutil::values(lifted)));

  // Every 3-rs colouring of the blow-up restricts to a proper 2-colouring.
  int seen = 0;
  oracle::enumerate(bu.graph.num_vertices(), 3, {}, [&](const std::vector<int>& c) {
    if (!oracle::rs(a, c)) return false;
    ++seen;
    const Colouring back = rs_to_proper_extraction(g, bu, Colouring(c, 3));
    CHECK(back.k() == 2);
    CHECK(oracle::proper(oracle::adjacency(g), testutil::values(back)));
    return false;
  });
  CHECK(seen > 0);
  CHECK_THROWS_AS((void)edge_blowup(Graph::from_edge_list(3, std::vector<Edge>{})), InputError);
}

TEST_CASE("blow-ups of graphs with chromatic number 3 have no 3-rs colouring") {
  gen::Rng rng(68);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 40; ++trial) {
    const Graph g = gen::gnp(3 + trial % 5, 0.5, rng);
    if (g.num_edges() == 0 || oracle::chromatic(g, oracle::proper) != 3) continue;
    ++tested;
    const BlowUp bu = edge_blowup(g);
    CHECK(decide_k_rs(bu.graph, 3).verdict == Verdict::no);
    CHECK(decide_k_rs(bu.graph, 4).verdict == Verdict::yes);
  }
  CHECK(tested == 40);
}

TEST_CASE("greedy proper colouring") {
  gen::Rng rng(66);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = gen::gnp(1 + trial % 20, 0.3, rng);
    const Colouring c = greedy_proper_colouring(g);
    CHECK(c.k() <= static_cast<int>(g.max_degree()) + 1);
    CHECK(oracle::proper(oracle::adjacency(g), testutil::values(c)));
  }
}

TEST_CASE("co-bipartite star to ordered") {
  gen::Rng rng(67);
  for (int trial = 0; trial < 80; ++trial) {
    const auto inst = gen::random_cobipartite(2 + trial % 6, rng);
    validate_cobipartite_partition(inst.graph, inst.partition);
    const int chi_s = oracle::chromatic(inst.graph, oracle::star);
    const auto star = oracle::find_colouring(inst.graph, chi_s, oracle::star);
    REQUIRE(star.has_value());
    const Colouring ord = star_to_ordered_cobipartite(inst.graph, inst.partition, Colouring(*star, chi_s));
    CHECK(ord.k() == chi_s);
    CHECK(oracle::ordered(oracle::adjacency(inst.graph), testutil::values(ord)));
  }
}

}  // TEST_SUITE
