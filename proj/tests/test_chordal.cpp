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

#include "oracles.hpp"
#include "rsc/chordal3rs.hpp"
#include "rsc/generators.hpp"
#include "test_util.hpp"

using namespace rsc;

namespace {

bool three_rs(const Graph& g) { return oracle::find_colouring(g, 3, oracle::rs).has_value(); }

}  // namespace

TEST_SUITE("chordal") {

TEST_CASE("triangle classification") {
  const Graph k4 = families::complete(4);
  CHECK(classify_triangle(k4, {0, 1, 2}).type == TriangleKind::Type::type_i);
  // Triangle 0 1 2 with a pendant on 0 and 1: vertex 2 is the low one.
  const Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
  const TriangleKind t = classify_triangle(g, {0, 1, 2});
  CHECK(t.type == TriangleKind::Type::type_ii);
  CHECK(t.low_degree_vertex == 2);
  CHECK_THROWS_AS((void)classify_triangle(g, {0, 1, 3}), InputError);
}

TEST_CASE("elimination rewires the triangle") {
  const Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
  const Graph h = eliminate_type2_triangle(g, {0, 1, 2}, 2);
  CHECK(h.num_vertices() == 8);
  CHECK(h.num_edges() == 7);
  CHECK(list_triangles(h).empty());
  CHECK(h.degree(0) == 4);
  CHECK(h.degree(1) == 4);
  CHECK(h.has_edge(2, 0));  // old vertex 3 moved down to 2
  CHECK(h.has_edge(0, 4));
  CHECK(h.has_edge(1, 6));
  CHECK_THROWS_AS((void)eliminate_type2_triangle(g, {0, 1, 2}, 0), InputError);
}

TEST_CASE("elimination preserves 3-rs colourability") {
  gen::Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = gen::random_chordal(4 + trial % 4, rng);
    for (const Triangle& t : list_triangles(g)) {
      const TriangleKind k = classify_triangle(g, t);
      if (k.type != TriangleKind::Type::type_ii) continue;
      CHECK(three_rs(eliminate_type2_triangle(g, t, k.low_degree_vertex)) == three_rs(g));
      break;
    }
  }
}

TEST_CASE("small cases") {
  const ChordalTestResult k4 = test_3rs_chordal(families::complete(4));
  CHECK_FALSE(k4.colourable);
  REQUIRE(k4.type_i.has_value());
  CHECK(*k4.type_i == Triangle{0, 1, 2});
  CHECK(test_3rs_chordal(families::complete(3)).colourable);
  CHECK(test_3rs_chordal(families::path(6)).colourable);
  CHECK(test_3rs_chordal(Graph{}).colourable);
  CHECK_THROWS_AS((void)test_3rs_chordal(families::cycle(4)), InputError);
}

TEST_CASE("random chordal graphs agree with exhaustive enumeration") {
  gen::Rng rng(52);
  int no = 0, yes = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = gen::random_chordal(3 + trial % 7, rng);
    ChordalTestOptions opts;
    opts.keep_forest = true;
    opts.check_each_step = trial % 2 == 0;
    const ChordalTestResult r = test_3rs_chordal(g, opts);
    const bool expect = three_rs(g);
    CHECK(r.colourable == expect);
    (expect ? yes : no)++;
    if (!r.type_i) {
      CHECK(is_forest(r.final_forest));
      CHECK(r.eliminations == r.triangle_counts.size());
    }
    for (std::size_t i = 1; i < r.triangle_counts.size(); ++i)
      CHECK(r.triangle_counts[i] <= r.triangle_counts[i - 1]);
  }
  CHECK(yes > 50);
  CHECK(no > 50);
}

TEST_CASE("components are tested independently") {
  gen::Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph a = gen::random_chordal(3 + trial % 5, rng);
    const Graph b = gen::random_chordal(3 + (trial / 5) % 5, rng);
    const bool both = test_3rs_chordal(a).colourable && test_3rs_chordal(b).colourable;
    CHECK(test_3rs_chordal(disjoint_union(a, b)).colourable == both);
  }
}

}  // TEST_SUITE
