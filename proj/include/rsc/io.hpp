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

// Text formats. Readers report problems as InputError("<source>:<line>: ...").
//
//   graph      "p edge <n> <m>", then m lines "e <u> <v>" (1-based); "c" comments
//   colouring  "<vertex_1based> <colour>" per vertex, sorted by vertex
//   cnf        DIMACS "p cnf <vars> <clauses>", positive literals, 3 per clause
//   matrix     Matrix Market coordinate, symmetric, real or pattern
//   dense      CSV, one row per line

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rsc/colouring.hpp"
#include "rsc/constructions.hpp"
#include "rsc/graph.hpp"
#include "rsc/hessian.hpp"

namespace rsc::io {

[[nodiscard]] Graph read_graph(std::istream& in, const std::string& source = "<input>");
void write_graph(std::ostream& out, const Graph& g);

/// Reads a total colouring of n vertices; k is inferred unless given.
[[nodiscard]] Colouring read_colouring(std::istream& in, std::size_t n, const std::string& source = "<input>",
                                       std::optional<int> k = std::nullopt);
void write_colouring(std::ostream& out, const Colouring& c);

[[nodiscard]] PositiveCnf read_cnf(std::istream& in, const std::string& source = "<input>");
void write_cnf(std::ostream& out, const PositiveCnf& f);

struct MatrixMarket {
  SparsityPattern pattern;
  std::optional<DenseMatrix> values;  ///< absent for "pattern" files
};
[[nodiscard]] MatrixMarket read_matrix_market(std::istream& in, const std::string& source = "<input>");
void write_matrix_market(std::ostream& out, const DenseMatrix& h, const SparsityPattern& p);

[[nodiscard]] DenseMatrix read_dense_csv(std::istream& in, const std::string& source = "<input>");
void write_dense_csv(std::ostream& out, const DenseMatrix& m);

/// One "u -- v;" line per edge (1-based), no layout attributes.
void write_dot(std::ostream& out, const Graph& g);

/// "name vertex_1based" lines.
void write_names(std::ostream& out, const std::vector<std::pair<std::string, VertexId>>& names);

/// Whole file contents; throws InputError if it cannot be opened.
[[nodiscard]] std::string slurp(const std::string& path);

}  // namespace rsc::io
