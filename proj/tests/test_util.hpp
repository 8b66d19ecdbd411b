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

#include <string>

#include "rsc/colouring.hpp"
#include "rsc/generators.hpp"
#include "rsc/graph.hpp"

#ifndef RSC_TEST_DATA
#error "RSC_TEST_DATA must point at tests/data"
#endif

namespace testutil {

inline std::string data(const std::string& name) { return std::string(RSC_TEST_DATA) + "/" + name; }

inline std::vector<int> values(const rsc::Colouring& c) { return {c.colours().begin(), c.colours().end()}; }

/// Connected random graph: a random tree plus G(n, p) edges on top.
inline rsc::Graph random_connected(std::size_t n, double p, rsc::gen::Rng& rng) {
  const rsc::Graph t = rsc::gen::random_tree(n, rng);
  const rsc::Graph extra = rsc::gen::gnp(n, p, rng);
  std::vector<rsc::Edge> e = t.edges();
  for (auto uv : extra.edges()) e.push_back(uv);
  return rsc::Graph::from_edge_list(n, e);
}

}  // namespace testutil
