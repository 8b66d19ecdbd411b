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
#include "rsc/colouring.hpp"
#include "rsc/exact_solver.hpp"
#include "rsc/generators.hpp"
#include "test_util.hpp"

using namespace rsc;

namespace {

Colouring random_colouring(std::size_t n, int k, gen::Rng& rng) {
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::vector<Colour> c(n);
  for (auto& x : c) x = pick(rng);
  return Colouring(c, k);
}

}  // namespace

TEST_SUITE("colouring") {

TEST_CASE("dart") {
  const Graph g = families::dart();
  const Colouring good({1, 0, 1, 2, 2}, 3);
  CHECK(is_rs(g, good));
  CHECK(is_star(g, good));
  CHECK_FALSE(is_distance_two(g, good));

  const Colouring flipped({1, 2, 1, 2, 2}, 3);
  const auto bad = find_rs_violation(g, flipped);
  REQUIRE(bad.has_value());
  CHECK(bad->kind == RsViolation::Kind::bicoloured_p3);
  REQUIRE(bad->path.size() == 3);
  CHECK(bad->path[1] == 1);
  CHECK(flipped[bad->path[0]] == flipped[bad->path[2]]);
  CHECK(flipped[bad->path[1]] > flipped[bad->path[0]]);
}

TEST_CASE("monochromatic edge witness") {
  const auto bad = find_rs_violation(families::path(2), Colouring({0, 0}, 1));
  REQUIRE(bad.has_value());
  CHECK(bad->kind == RsViolation::Kind::improper_edge);
}

TEST_CASE("colouring containers") {
  CHECK_THROWS_AS(Colouring({0, 3}, 3), InputError);
  CHECK_THROWS_AS(Colouring({-1, 0}, 3), InputError);
  const Colouring c = Colouring::inferred({2, 0, 2, 5});
  CHECK(c.k() == 6);
  CHECK(c.used_colours() == 3);
  CHECK(c.classes()[2] == std::vector<VertexId>{0, 2});
  CHECK(c.classes()[1].empty());

  PartialColouring p(3, 3);
  p.set(1, 2);
  CHECK(p.is_set(1));
  CHECK_FALSE(p.is_set(0));
  CHECK(p.extended_by(Colouring({0, 2, 1}, 3)));
  CHECK_FALSE(p.extended_by(Colouring({0, 1, 1}, 3)));
  CHECK_FALSE(p.extended_by(Colouring({0, 2}, 3)));
  CHECK_THROWS_AS(p.set(0, 3), InputError);
}

TEST_CASE("verifiers agree with literal definitions") {
  gen::Rng rng(21);
  int rs_seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const Graph g = gen::gnp(n, 0.15 + 0.05 * (trial % 8), rng);
    const Colouring c = random_colouring(n, 2 + trial % 4, rng);
    const auto a = oracle::adjacency(g);
    const auto v = testutil::values(c);
    CHECK(is_proper(g, c) == oracle::proper(a, v));
    CHECK(is_rs(g, c) == oracle::rs(a, v));
    CHECK(is_star(g, c) == oracle::star(a, v));
    CHECK(is_ordered(g, c) == oracle::ordered(a, v));
    CHECK(is_distance_two(g, c) == oracle::distance_two(a, v));
    rs_seen += oracle::rs(a, v);
  }
  CHECK(rs_seen > 100);
}

TEST_CASE("containment chain") {
  gen::Rng rng(22);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const Graph g = gen::gnp(n, 0.3, rng);
    const Colouring c = random_colouring(n, 3 + trial % 5, rng);
    if (is_distance_two(g, c)) CHECK(is_rs(g, c));
    if (is_ordered(g, c)) CHECK(is_star(g, c));
    if (is_rs(g, c)) CHECK(is_star(g, c));
    if (is_star(g, c)) CHECK(is_proper(g, c));
  }
}

TEST_CASE("3-rs colourings have the structural properties") {
  gen::Rng rng(23);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = trial % 2 ? gen::random_tree(4 + trial % 7, rng) : gen::random_chordal(4 + trial % 6, rng);
    const auto found = oracle::find_colouring(g, 3, oracle::rs);
    if (!found) continue;
    const PropertyReport r = check_properties(g, Colouring(*found, 3));
    CHECK(r.all_pass());
    ++checked;
  }
  CHECK(checked > 100);
  CHECK_THROWS_AS((void)check_properties(families::path(2), Colouring({0, 0}, 3)), InputError);
}

}  // TEST_SUITE
