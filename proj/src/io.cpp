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

#include "rsc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace rsc::io {

namespace {

// Line reader that tracks the line number for error messages.
class Lines {
 public:
  Lines(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(source_ + ":" + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t number_ = 0;
};

template <class T>
T parse_number(const Lines& lines, const std::string& token, const char* what) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) lines.fail(std::string("bad ") + what + " '" + token + "'");
  return value;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source) {
  Lines lines(in, source);
  std::string line;
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::vector<Edge> edges;
  while (lines.next(line)) {
    const auto tok = split_ws(line);
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n) lines.fail("second problem line");
      if (tok.size() != 4 || tok[1] != "edge") lines.fail("expected 'p edge <n> <m>'");
      n = parse_number<std::size_t>(lines, tok[2], "vertex count");
      declared_m = parse_number<std::size_t>(lines, tok[3], "edge count");
      continue;
    }
    if (tok[0] == "e") {
      if (!n) lines.fail("edge before problem line");
      if (tok.size() != 3) lines.fail("expected 'e <u> <v>'");
      const auto u = parse_number<std::size_t>(lines, tok[1], "vertex");
      const auto v = parse_number<std::size_t>(lines, tok[2], "vertex");
      if (u < 1 || u > *n || v < 1 || v > *n) lines.fail("vertex out of range");
      if (u == v) lines.fail("self-loop");
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
      continue;
    }
    lines.fail("unknown line type '" + tok[0] + "'");
  }
  if (!n) throw InputError(source + ": missing problem line");
  if (edges.size() != declared_m) {
    throw InputError(source + ": declared " + std::to_string(declared_m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph::from_edge_list(*n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Colouring read_colouring(std::istream& in, std::size_t n, const std::string& source, std::optional<int> k) {
  Lines lines(in, source);
  std::string line;
  std::vector<Colour> col(n, kUncoloured);
  while (lines.next(line)) {
    const auto tok = split_ws(line);
    if (tok[0] == "c" || tok[0][0] == '#') continue;
    if (tok.size() != 2) lines.fail("expected '<vertex> <colour>'");
    const auto v = parse_number<std::size_t>(lines, tok[0], "vertex");
    const auto c = parse_number<int>(lines, tok[1], "colour");
    if (v < 1 || v > n) lines.fail("vertex out of range");
    if (c < 0) lines.fail("negative colour");
    if (col[v - 1] != kUncoloured) lines.fail("vertex coloured twice");
    col[v - 1] = c;
  }
  const auto missing = std::find(col.begin(), col.end(), kUncoloured);
  if (missing != col.end()) {
    throw InputError(source + ": vertex " + std::to_string(missing - col.begin() + 1) + " has no colour");
  }
  return k ? Colouring(std::move(col), *k) : Colouring::inferred(std::move(col));
}

void write_colouring(std::ostream& out, const Colouring& c) {
  for (VertexId v = 0; v < c.size(); ++v) out << v + 1 << ' ' << c[v] << '\n';
}

PositiveCnf read_cnf(std::istream& in, const std::string& source) {
  Lines lines(in, source);
  std::string line;
  PositiveCnf f;
  bool header = false;
  std::size_t declared = 0;
  std::vector<long> pending;
  while (lines.next(line)) {
    const auto tok = split_ws(line);
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (header) lines.fail("second problem line");
      if (tok.size() != 4 || tok[1] != "cnf") lines.fail("expected 'p cnf <vars> <clauses>'");
      f.num_vars = parse_number<std::size_t>(lines, tok[2], "variable count");
      declared = parse_number<std::size_t>(lines, tok[3], "clause count");
      header = true;
      continue;
    }
    if (!header) lines.fail("clause before problem line");
    for (const auto& t : tok) {
      const long lit = parse_number<long>(lines, t, "literal");
      if (lit != 0) {
        if (lit < 0) lines.fail("negated literal " + t);
        if (static_cast<std::size_t>(lit) > f.num_vars) lines.fail("variable " + t + " out of range");
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) lines.fail("clause has " + std::to_string(pending.size()) + " literals, need 3");
      if (pending[0] == pending[1] || pending[1] == pending[2] || pending[0] == pending[2]) {
        lines.fail("clause repeats a variable");
      }
      f.clauses.push_back({static_cast<std::size_t>(pending[0] - 1), static_cast<std::size_t>(pending[1] - 1),
                           static_cast<std::size_t>(pending[2] - 1)});
      pending.clear();
    }
  }
  if (!header) throw InputError(source + ": missing problem line");
  if (!pending.empty()) throw InputError(source + ": last clause not terminated by 0");
  if (f.clauses.size() != declared) {
    throw InputError(source + ": declared " + std::to_string(declared) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  }
  return f;
}

void write_cnf(std::ostream& out, const PositiveCnf& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& cl : f.clauses) out << cl[0] + 1 << ' ' << cl[1] + 1 << ' ' << cl[2] + 1 << " 0\n";
}

MatrixMarket read_matrix_market(std::istream& in, const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) throw InputError(source + ":1: empty file");
  std::string lower = line;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  const auto head = split_ws(lower);
  if (head.size() != 5 || head[0] != "%%matrixmarket" || head[1] != "matrix" || head[2] != "coordinate") {
    throw InputError(source + ":1: expected '%%MatrixMarket matrix coordinate <field> symmetric'");
  }
  const bool pattern_only = head[3] == "pattern";
  if (!pattern_only && head[3] != "real" && head[3] != "integer") {
    throw InputError(source + ":1: unsupported field '" + head[3] + "'");
  }
  if (head[4] != "symmetric") throw InputError(source + ":1: only symmetric matrices are supported");

  std::size_t number = 1;
  auto fail = [&](const std::string& what) {
    throw InputError(source + ":" + std::to_string(number) + ": " + what);
  };
  std::size_t rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  std::vector<Edge> entries;
  std::vector<std::tuple<std::size_t, std::size_t, double>> values;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ss(line);
    if (!have_size) {
      if (!(ss >> rows >> cols >> nnz)) fail("bad size line");
      if (rows != cols) fail("matrix is not square");
      have_size = true;
      continue;
    }
    std::size_t i = 0, j = 0;
    double x = 1.0;
    if (!(ss >> i >> j)) fail("bad entry");
    if (!pattern_only && !(ss >> x)) fail("missing value");
    if (i < 1 || i > rows || j < 1 || j > cols) fail("index out of range");
    if (j > i) fail("symmetric files store the lower triangle only");
    entries.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1));
    values.emplace_back(i - 1, j - 1, x);
  }
  if (!have_size) throw InputError(source + ": missing size line");
  if (entries.size() != nnz) {
    throw InputError(source + ": declared " + std::to_string(nnz) + " entries, found " +
                     std::to_string(entries.size()));
  }
  MatrixMarket mm;
  mm.pattern = SparsityPattern::from_triangle(rows, entries);
  if (!pattern_only) {
    DenseMatrix h(rows, rows);
    for (auto [i, j, x] : values) h(i, j) = h(j, i) = x;
    mm.values = std::move(h);
  }
  return mm;
}

void write_matrix_market(std::ostream& out, const DenseMatrix& h, const SparsityPattern& p) {
  std::size_t nnz = p.dimension() + p.offdiag().size();
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << p.dimension() << ' ' << p.dimension() << ' ' << nnz << '\n';
  out << std::setprecision(17);
  std::vector<Edge> lower;
  for (VertexId i = 0; i < p.dimension(); ++i) lower.emplace_back(i, i);
  for (auto [i, j] : p.offdiag()) lower.emplace_back(j, i);
  std::sort(lower.begin(), lower.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
  });
  for (auto [i, j] : lower) out << i + 1 << ' ' << j + 1 << ' ' << h(i, j) << '\n';
}

DenseMatrix read_dense_csv(std::istream& in, const std::string& source) {
  Lines lines(in, source);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (lines.next(line)) {
    std::vector<double> row;
    std::istringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
      const auto a = cell.find_first_not_of(" \t");
      const auto b = cell.find_last_not_of(" \t");
      if (a == std::string::npos) lines.fail("empty cell");
      cell = cell.substr(a, b - a + 1);
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (used != cell.size()) lines.fail("bad number '" + cell + "'");
      } catch (const std::logic_error&) {
        lines.fail("bad number '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) lines.fail("ragged row");
    rows.push_back(std::move(row));
  }
  DenseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  return m;
}

void write_dense_csv(std::ostream& out, const DenseMatrix& m) {
  out << std::setprecision(17);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out << (j ? "," : "") << m(i, j);
    out << '\n';
  }
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph G {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) out << "  " << v + 1 << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u + 1 << " -- " << v + 1 << ";\n";
  out << "}\n";
}

void write_names(std::ostream& out, const std::vector<std::pair<std::string, VertexId>>& names) {
  for (const auto& [name, v] : names) out << name << ' ' << v + 1 << '\n';
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace rsc::io
