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

#include <benchmark/benchmark.h>

#include <map>

#include "rsc/constructions.hpp"
#include "rsc/exact_solver.hpp"
#include "rsc/generators.hpp"
#include "rsc/hessian.hpp"
#include "rsc/tree3rs.hpp"

namespace {

struct HessianCase {
  rsc::SparsityPattern pattern;
  rsc::DenseMatrix h;
  rsc::SeedGrouping grouping;
  rsc::DenseMatrix b;
};

const HessianCase& hessian_case(std::size_t n) {
  static std::map<std::size_t, HessianCase> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  rsc::gen::Rng rng(n);
  HessianCase c;
  c.pattern = rsc::gen::random_pattern(n, 8.0 / static_cast<double>(n), rng);
  c.h = rsc::gen::random_symmetric(c.pattern, rng);
  c.grouping = rsc::make_seed_grouping(c.pattern, rsc::greedy_rs_colouring(rsc::pattern_to_graph(c.pattern)));
  c.b = rsc::compress(c.h, c.pattern, c.grouping);
  return cache.emplace(n, std::move(c)).first->second;
}

void BM_CompressSerial(benchmark::State& state) {
  const auto& c = hessian_case(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rsc::compress(c.h, c.pattern, c.grouping));
}

void BM_CompressParallel(benchmark::State& state) {
  const auto& c = hessian_case(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rsc::compress_parallel(c.h, c.pattern, c.grouping));
}

void BM_RecoverSerial(benchmark::State& state) {
  const auto& c = hessian_case(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rsc::recover(c.b, c.pattern, c.grouping));
}

void BM_RecoverParallel(benchmark::State& state) {
  const auto& c = hessian_case(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rsc::recover_parallel(c.b, c.pattern, c.grouping));
}

// Refuting 3-rs colourability of the girth gadget of the four-clause formula.
void BM_SolverThreads(benchmark::State& state) {
  static const rsc::Graph g = rsc::sat_to_graph(rsc::four_clause_formula(), 2).graph;
  rsc::SolveOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rsc::decide_k_rs(g, 3, opts));
}

void BM_TreeTester(benchmark::State& state) {
  rsc::gen::Rng rng(5);
  const rsc::Graph t =
      rsc::subdivide_all_edges(rsc::gen::random_tree(static_cast<std::size_t>(state.range(0)) / 2, rng)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(rsc::test_3rs_tree(t));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_CompressSerial)->Arg(500)->Arg(2000);
BENCHMARK(BM_CompressParallel)->Arg(500)->Arg(2000);
BENCHMARK(BM_RecoverSerial)->Arg(500)->Arg(2000);
BENCHMARK(BM_RecoverParallel)->Arg(500)->Arg(2000);
BENCHMARK(BM_SolverThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeTester)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
