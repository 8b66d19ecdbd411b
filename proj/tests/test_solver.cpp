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
#include "rsc/constructions.hpp"
#include "rsc/exact_solver.hpp"
#include "rsc/generators.hpp"
#include "test_util.hpp"

using namespace rsc;

namespace {

const oracle::Check& check_for(ColouringKind kind) {
  static const oracle::Check p = oracle::proper, r = oracle::rs, s = oracle::star, o = oracle::ordered;
  switch (kind) {
    case ColouringKind::proper: return p;
    case ColouringKind::rs: return r;
    case ColouringKind::star: return s;
    case ColouringKind::ordered: return o;
  }
  return p;
}

constexpr ColouringKind kKinds[] = {ColouringKind::proper, ColouringKind::rs, ColouringKind::star,
                                    ColouringKind::ordered};

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("decisions match exhaustive enumeration") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 240; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Graph g = gen::gnp(n, 0.2 + 0.1 * (trial % 5), rng);
    const auto a = oracle::adjacency(g);
    for (ColouringKind kind : kKinds) {
      for (int k = 1; k <= 4; ++k) {
        const SolveResult r = decide_k_colouring(g, k, kind);
        REQUIRE(r.verdict != Verdict::budget_exceeded);
        const bool expect = oracle::find_colouring(g, k, check_for(kind)).has_value();
        CHECK(r.verdict == (expect ? Verdict::yes : Verdict::no));
        if (r.witness) {
          CHECK(r.witness->k() == k);
          CHECK(check_for(kind)(a, testutil::values(*r.witness)));
        }
      }
    }
  }
}

TEST_CASE("precoloured vertices are respected") {
  gen::Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const Graph g = gen::gnp(n, 0.35, rng);
    const int k = 3;
    PartialColouring pre(n, k);
    std::vector<int> pre_vals(n, -1);
    std::uniform_int_distribution<int> col(0, k - 1);
    for (VertexId v = 0; v < n; ++v)
      if (rng() % 3 == 0) pre.set(v, pre_vals[v] = col(rng));
    for (ColouringKind kind : kKinds) {
      SolveOptions opts;
      opts.precolouring = &pre;
      const SolveResult r = decide_k_colouring(g, k, kind, opts);
      const bool expect = oracle::find_colouring(g, k, check_for(kind), pre_vals).has_value();
      CHECK(r.verdict == (expect ? Verdict::yes : Verdict::no));
      if (r.witness) CHECK(pre.extended_by(*r.witness));
    }
  }
}

TEST_CASE("chromatic numbers match exhaustive enumeration") {
  gen::Rng rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = gen::gnp(2 + trial % 6, 0.4, rng);
    for (ColouringKind kind : kKinds) {
      const ChromaticResult r = chromatic_number(g, kind);
      REQUIRE(r.verdict == Verdict::yes);
      CHECK(r.value == oracle::chromatic(g, check_for(kind)));
      REQUIRE(r.witness.has_value());
      CHECK(check_for(kind)(oracle::adjacency(g), testutil::values(*r.witness)));
    }
  }
}

TEST_CASE("known values") {
  CHECK(rs_chromatic_number(families::hypercube(2)).value == 3);
  CHECK(rs_chromatic_number(families::hypercube(3)).value == 4);
  CHECK(decide_k_rs(families::path(4), 2).verdict == Verdict::no);
  CHECK(decide_k_rs(families::dart(), 3).verdict == Verdict::yes);
  CHECK(star_chromatic_number(families::cycle(5)).value == 4);
  CHECK(ordered_chromatic_number(families::path(7)).value == 3);
  CHECK(chromatic_number(Graph::from_edge_list(3, {}), ColouringKind::rs).value == 1);
}

TEST_CASE("budget exhaustion is never a no") {
  SolveOptions opts;
  opts.budget.max_nodes = 1000;
  // Refuting this one takes tens of thousands of nodes.
  const Graph g = sat_to_graph(four_clause_formula(), 2).graph;
  const SolveResult r = decide_k_rs(g, 3, opts);
  CHECK(r.verdict == Verdict::budget_exceeded);
  CHECK_FALSE(r.witness.has_value());
  const ChromaticResult c = rs_chromatic_number(g, SolveBudget{1000, 10.0});
  CHECK(c.verdict == Verdict::budget_exceeded);
}

TEST_CASE("threaded search and unbroken symmetry agree with the serial search") {
  gen::Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = gen::gnp(6 + trial % 6, 0.35, rng);
    for (ColouringKind kind : kKinds) {
      const int k = 3 + trial % 2;
      const Verdict serial = decide_k_colouring(g, k, kind).verdict;
      SolveOptions par;
      par.threads = 3;
      const SolveResult p = decide_k_colouring(g, k, kind, par);
      CHECK(p.verdict == serial);
      if (p.witness) CHECK(check_for(kind)(oracle::adjacency(g), testutil::values(*p.witness)));
      SolveOptions plain;
      plain.symmetry_breaking = false;
      CHECK(decide_k_colouring(g, k, kind, plain).verdict == serial);
    }
  }
}

TEST_CASE("maximum independent set") {
  gen::Rng rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = gen::gnp(1 + trial % 14, 0.3, rng);
    const auto r = max_independent_set(g);
    REQUIRE(r.verdict == Verdict::yes);
    CHECK(r.vertices.size() == oracle::independence_number(g));
    for (std::size_t i = 0; i < r.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < r.vertices.size(); ++j) CHECK_FALSE(g.has_edge(r.vertices[i], r.vertices[j]));
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS((void)decide_k_rs(families::path(3), kMaxSolverColours + 1), InputError);
  SolveOptions opts;
  opts.budget.max_nodes = 0;
  CHECK_THROWS_AS((void)decide_k_rs(families::path(3), 2, opts), InputError);
  CHECK(std::string(to_string(Verdict::budget_exceeded)) == "budget_exceeded");
  CHECK(std::string(to_string(ColouringKind::ordered)) == "ordered");
}

}  // TEST_SUITE
