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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "rsc/chordal3rs.hpp"
#include "rsc/colouring.hpp"
#include "rsc/constructions.hpp"
#include "rsc/exact_solver.hpp"
#include "rsc/generators.hpp"
#include "rsc/graph.hpp"
#include "rsc/hessian.hpp"
#include "rsc/io.hpp"
#include "rsc/tree3rs.hpp"

namespace rsc::cli {

namespace {

struct Files {
  std::string graph, colouring, cnf, matrix, compressed, out, names, dot, dump_tree, cnf_out, colouring_out;
};

Graph load_graph(const std::string& path) {
  std::istringstream in(io::slurp(path));
  return io::read_graph(in, path);
}

Colouring load_colouring(const std::string& path, std::size_t n) {
  std::istringstream in(io::slurp(path));
  return io::read_colouring(in, n, path);
}

template <class Writer>
void save(const std::string& path, Writer&& write) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  write(f);
}

void save_dot(const std::string& path, const Graph& g) {
  save(path, [&](std::ostream& f) { io::write_dot(f, g); });
}

std::vector<VertexId> to_zero_based(const std::vector<std::size_t>& one_based, std::size_t n) {
  std::vector<VertexId> out;
  for (std::size_t v : one_based) {
    if (v < 1 || v > n) throw InputError("vertex " + std::to_string(v) + " out of range");
    out.push_back(static_cast<VertexId>(v - 1));
  }
  return out;
}

std::string join_path(const std::vector<VertexId>& path) {
  std::string s;
  for (VertexId v : path) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::yes: return kYes;
    case Verdict::no: return kNo;
    case Verdict::budget_exceeded: return kBudget;
  }
  return kUsage;
}

const char* verdict_token(Verdict v) {
  switch (v) {
    case Verdict::yes: return "YES";
    case Verdict::no: return "NO";
    case Verdict::budget_exceeded: return "BUDGET_EXCEEDED";
  }
  return "ERROR";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"restricted star colouring toolkit", "rsc"};
  app.require_subcommand(1);
  Files files;
  std::string kind = "rs";
  std::string variant = "basic";
  std::string order = "natural";
  int k = -1;
  std::size_t s = 2;
  std::uint64_t seed = 1;
  int threads = 1;
  std::uint64_t budget_nodes = 10'000'000;
  double budget_secs = 120.0;
  std::size_t path_n = 0;
  int end_i = 0, end_j = 0;
  bool mis = false;
  std::vector<std::size_t> clique, side_a;
  std::vector<std::size_t> random_cnf;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "OpenMP threads for the search")->check(CLI::PositiveNumber);
    sub->add_option("--budget-nodes", budget_nodes, "search-node limit")->check(CLI::PositiveNumber);
    sub->add_option("--budget-secs", budget_secs, "wall-clock limit in seconds")->check(CLI::PositiveNumber);
  };
  auto add_graph = [&](CLI::App* sub) { sub->add_option("-g,--graph", files.graph, "graph file")->required(); };
  auto add_dot = [&](CLI::App* sub) { sub->add_option("--dot", files.dot, "write the graph as DOT"); };

  auto* verify = app.add_subcommand("verify", "check a colouring");
  add_graph(verify);
  verify->add_option("-c,--colouring", files.colouring, "colouring file")->required();
  verify->add_option("--kind", kind, "proper|rs|star|ordered|distance-two")
      ->check(CLI::IsMember({"proper", "rs", "star", "ordered", "distance-two"}));
  verify->add_option("-k", k, "colour budget (default: max colour + 1)");

  auto* solve = app.add_subcommand("solve", "exact k-colouring decision, chromatic number or independence number");
  add_graph(solve);
  solve->add_option("-k", k, "decide k-colourability (omit for the chromatic number)");
  solve->add_option("--kind", kind, "proper|rs|star|ordered")->check(CLI::IsMember({"proper", "rs", "star", "ordered"}));
  solve->add_flag("--mis", mis, "maximum independent set instead");
  solve->add_option("-o,--out", files.out, "write the witness colouring / set");
  add_budget(solve);
  add_dot(solve);

  auto* tree = app.add_subcommand("tree3rs", "linear-time 3-rs test for trees");
  add_graph(tree);
  add_dot(tree);

  auto* chordal = app.add_subcommand("chordal3rs", "3-rs test for chordal graphs");
  add_graph(chordal);
  chordal->add_option("--dump-tree", files.dump_tree, "write the final forest as a graph file");
  add_dot(chordal);

  auto* pathf = app.add_subcommand("path-feasible", "endpoint-precoloured 3-rs colourability of a path");
  pathf->add_option("-n", path_n, "number of vertices")->required();
  pathf->add_option("-i", end_i, "colour of the first endpoint")->required()->check(CLI::Range(0, 1));
  pathf->add_option("-j", end_j, "colour of the last endpoint")->required()->check(CLI::Range(0, 1));

  auto* gensat = app.add_subcommand("gen-sat", "gadget graph of a positive 3-CNF");
  auto* cnf_opt = gensat->add_option("-f,--cnf", files.cnf, "DIMACS cnf file");
  gensat->add_option("--random", random_cnf, "generate a planted formula: VARS CLAUSES")
      ->expected(2)
      ->excludes(cnf_opt);
  gensat->add_option("--seed", seed, "random seed");
  gensat->add_option("--variant", variant, "basic|girth")->check(CLI::IsMember({"basic", "girth"}));
  gensat->add_option("--s", s, "girth gadget parameter (even, >= 2)");
  gensat->add_option("-o,--out", files.out, "graph output")->required();
  gensat->add_option("--names", files.names, "vertex name sidecar");
  gensat->add_option("--cnf-out", files.cnf_out, "write the (generated) formula");
  gensat->add_option("--colouring-out", files.colouring_out,
                     "write the forward 3-rs colouring of the planted assignment (--random only)");
  add_dot(gensat);

  auto* genblow = app.add_subcommand("gen-blowup", "replace every edge by K_{2,delta+1}");
  add_graph(genblow);
  genblow->add_option("-o,--out", files.out, "graph output")->required();
  genblow->add_option("-c,--colouring", files.colouring, "proper colouring of the input to lift");
  genblow->add_option("--colouring-out", files.colouring_out, "lifted rs colouring");
  add_dot(genblow);

  auto* gplus = app.add_subcommand("gplus", "pad every vertex to degree delta+1 with pendants");
  add_graph(gplus);
  gplus->add_option("-o,--out", files.out, "graph output")->required();
  add_dot(gplus);

  auto* split = app.add_subcommand("split-chi", "rs chromatic number of a split graph");
  add_graph(split);
  split->add_option("--clique", clique, "clique side, 1-based vertices")->required()->delimiter(',');

  auto* cobip = app.add_subcommand("cobip-convert", "star colouring of a co-bipartite graph -> ordered colouring");
  add_graph(cobip);
  cobip->add_option("-c,--colouring", files.colouring, "star colouring")->required();
  cobip->add_option("--side-a", side_a, "one clique side, 1-based vertices")->required()->delimiter(',');
  cobip->add_option("-o,--out", files.out, "ordered colouring output");

  auto* hc = app.add_subcommand("hess-compress", "compress a symmetric matrix with an rs grouping");
  hc->add_option("-m,--matrix", files.matrix, "Matrix Market file (real, symmetric)")->required();
  hc->add_option("-c,--colouring", files.colouring, "grouping to use (default: greedy)");
  hc->add_option("--order", order, "natural|ldf")->check(CLI::IsMember({"natural", "ldf"}));
  hc->add_option("--threads", threads, "OpenMP threads (0: all)");
  hc->add_option("-o,--out", files.out, "compressed matrix CSV")->required();
  hc->add_option("--grouping-out", files.colouring_out, "grouping in colouring format");

  auto* hr = app.add_subcommand("hess-recover", "recover a symmetric matrix from its compressed form");
  hr->add_option("-m,--matrix", files.matrix, "Matrix Market file giving the pattern")->required();
  hr->add_option("-b,--compressed", files.compressed, "compressed matrix CSV")->required();
  hr->add_option("-c,--colouring", files.colouring, "grouping")->required();
  hr->add_option("--threads", threads, "OpenMP threads (0: all)");
  hr->add_option("-o,--out", files.out, "recovered matrix CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << "RESULT: HELP\n" << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    out << "RESULT: ERROR\n";
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const SolveBudget budget{budget_nodes, budget_secs};
  try {
    if (*verify) {
      const Graph g = load_graph(files.graph);
      Colouring c = load_colouring(files.colouring, g.num_vertices());
      if (k >= 0) c = Colouring({c.colours().begin(), c.colours().end()}, k);
      bool ok = false;
      std::string detail;
      if (kind == "proper") ok = is_proper(g, c);
      if (kind == "star") ok = is_star(g, c);
      if (kind == "ordered") ok = is_ordered(g, c);
      if (kind == "distance-two") ok = is_distance_two(g, c);
      if (kind == "rs") {
        const auto bad = find_rs_violation(g, c);
        ok = !bad;
        if (bad) {
          detail = (bad->kind == RsViolation::Kind::bicoloured_p3 ? "bicoloured P3: " : "monochromatic edge: ") +
                   join_path(bad->path);
        }
      }
      out << "RESULT: " << (ok ? "VALID" : "INVALID") << '\n';
      out << "kind: " << kind << ", colours: " << c.k() << '\n';
      if (!detail.empty()) out << "witness: " << detail << '\n';
      return ok ? kYes : kNo;
    }

    if (*solve) {
      const Graph g = load_graph(files.graph);
      save_dot(files.dot, g);
      if (mis) {
        const auto r = max_independent_set(g, budget);
        out << "RESULT: " << verdict_token(r.verdict) << '\n';
        if (r.verdict == Verdict::budget_exceeded) return kBudget;
        std::vector<VertexId> vs = r.vertices;
        out << "alpha: " << vs.size() << "\nset: " << join_path(vs) << '\n';
        save(files.out, [&](std::ostream& f) { f << join_path(vs) << '\n'; });
        return kYes;
      }
      const ColouringKind ck = kind == "proper" ? ColouringKind::proper
                               : kind == "star" ? ColouringKind::star
                               : kind == "ordered" ? ColouringKind::ordered
                                                   : ColouringKind::rs;
      if (k < 0) {
        const auto r = chromatic_number(g, ck, budget);
        out << "RESULT: " << verdict_token(r.verdict) << '\n';
        if (r.verdict == Verdict::budget_exceeded) return kBudget;
        out << "chromatic number (" << kind << "): " << r.value << "\nnodes: " << r.nodes << '\n';
        save(files.out, [&](std::ostream& f) { io::write_colouring(f, *r.witness); });
        return kYes;
      }
      SolveOptions opts;
      opts.budget = budget;
      opts.threads = threads;
      const auto r = decide_k_colouring(g, k, ck, opts);
      out << "RESULT: " << verdict_token(r.verdict) << '\n';
      out << "kind: " << kind << ", k: " << k << ", nodes: " << r.nodes << '\n';
      if (r.witness) save(files.out, [&](std::ostream& f) { io::write_colouring(f, *r.witness); });
      return verdict_exit(r.verdict);
    }

    if (*tree) {
      const Graph g = load_graph(files.graph);
      save_dot(files.dot, g);
      const TreeTestResult r = test_3rs_tree(g);
      out << "RESULT: " << (r.colourable ? "YES" : "NO") << '\n';
      out << "3RS: " << (r.colourable ? "YES" : "NO") << '\n';
      if (!r.colourable) out << "reason: " << r.describe() << '\n';
      return r.colourable ? kYes : kNo;
    }

    if (*chordal) {
      const Graph g = load_graph(files.graph);
      save_dot(files.dot, g);
      ChordalTestOptions opts;
      opts.keep_forest = !files.dump_tree.empty();
      const ChordalTestResult r = test_3rs_chordal(g, opts);
      out << "RESULT: " << (r.colourable ? "YES" : "NO") << '\n';
      out << "3RS: " << (r.colourable ? "YES" : "NO") << '\n';
      out << "eliminations: " << r.eliminations << '\n';
      if (r.type_i) {
        out << "reason: type-I triangle " << join_path({(*r.type_i)[0], (*r.type_i)[1], (*r.type_i)[2]}) << '\n';
      } else if (r.tree && !r.tree->colourable) {
        out << "reason: " << r.tree->describe() << '\n';
      }
      if (opts.keep_forest && !r.type_i) save(files.dump_tree, [&](std::ostream& f) { io::write_graph(f, r.final_forest); });
      return r.colourable ? kYes : kNo;
    }

    if (*pathf) {
      const bool ok = path_3rs_feasible(path_n, end_i, end_j);
      out << "RESULT: " << (ok ? "YES" : "NO") << '\n';
      return ok ? kYes : kNo;
    }

    if (*gensat) {
      PositiveCnf f;
      std::optional<std::vector<bool>> planted;
      if (!random_cnf.empty()) {
        gen::Rng rng(seed);
        auto p = gen::random_planted_cnf(random_cnf[0], random_cnf[1], rng);
        f = std::move(p.formula);
        planted = std::move(p.assignment);
      } else if (!files.cnf.empty()) {
        std::istringstream in(io::slurp(files.cnf));
        f = io::read_cnf(in, files.cnf);
      } else {
        throw InputError("gen-sat needs --cnf or --random");
      }
      if (variant == "girth" && (s < 2 || s % 2 != 0)) throw InputError("--s must be even and at least 2");
      const GadgetGraph gg = sat_to_graph(f, variant == "girth" ? s : 0);
      save(files.out, [&](std::ostream& o) { io::write_graph(o, gg.graph); });
      save(files.names, [&](std::ostream& o) { io::write_names(o, gg.named_vertices()); });
      save(files.cnf_out, [&](std::ostream& o) { io::write_cnf(o, f); });
      save_dot(files.dot, gg.graph);
      if (!files.colouring_out.empty()) {
        if (!planted) throw InputError("--colouring-out needs --random");
        const Colouring c = assignment_to_3rs_colouring(f, gg, *planted);
        save(files.colouring_out, [&](std::ostream& o) { io::write_colouring(o, c); });
      }
      out << "RESULT: OK\n";
      out << "vertices: " << gg.graph.num_vertices() << ", edges: " << gg.graph.num_edges() << '\n';
      return kYes;
    }

    if (*genblow) {
      const Graph g = load_graph(files.graph);
      const BlowUp bu = edge_blowup(g);
      save(files.out, [&](std::ostream& o) { io::write_graph(o, bu.graph); });
      save_dot(files.dot, bu.graph);
      if (!files.colouring.empty()) {
        const Colouring lifted = colouring_lift(g, bu, load_colouring(files.colouring, g.num_vertices()));
        save(files.colouring_out, [&](std::ostream& o) { io::write_colouring(o, lifted); });
      }
      out << "RESULT: OK\n";
      out << "vertices: " << bu.graph.num_vertices() << ", edges: " << bu.graph.num_edges() << '\n';
      return kYes;
    }

    if (*gplus) {
      const Graph gp = g_plus(load_graph(files.graph));
      save(files.out, [&](std::ostream& o) { io::write_graph(o, gp); });
      save_dot(files.dot, gp);
      out << "RESULT: OK\n";
      out << "vertices: " << gp.num_vertices() << ", edges: " << gp.num_edges() << '\n';
      return kYes;
    }

    if (*split) {
      const Graph g = load_graph(files.graph);
      SplitPartition p;
      p.clique = to_zero_based(clique, g.num_vertices());
      std::vector<bool> in_c(g.num_vertices(), false);
      for (VertexId v : p.clique) in_c[v] = true;
      for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (!in_c[v]) p.independent.push_back(v);
      const int chi = split_rs_chromatic(g, p);
      out << "RESULT: OK\n";
      out << "chi_rs: " << chi << '\n';
      return kYes;
    }

    if (*cobip) {
      const Graph g = load_graph(files.graph);
      const Colouring sc = load_colouring(files.colouring, g.num_vertices());
      CoBipartitePartition p;
      p.a = to_zero_based(side_a, g.num_vertices());
      std::vector<bool> in_a(g.num_vertices(), false);
      for (VertexId v : p.a) in_a[v] = true;
      for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (!in_a[v]) p.b.push_back(v);
      const Colouring oc = star_to_ordered_cobipartite(g, p, sc);
      const bool ok = is_ordered(g, oc);
      out << "RESULT: " << (ok ? "VALID" : "INVALID") << '\n';
      out << "colours: " << oc.k() << '\n';
      save(files.out, [&](std::ostream& o) { io::write_colouring(o, oc); });
      return ok ? kYes : kNo;
    }

    if (*hc) {
      std::istringstream in(io::slurp(files.matrix));
      const auto mm = io::read_matrix_market(in, files.matrix);
      if (!mm.values) throw InputError(files.matrix + ": compression needs a real-valued matrix");
      const Graph g = pattern_to_graph(mm.pattern);
      const Colouring c = files.colouring.empty()
                              ? greedy_rs_colouring(g, order == "ldf" ? GreedyOrder::largest_degree_first
                                                                      : GreedyOrder::natural)
                              : load_colouring(files.colouring, g.num_vertices());
      const SeedGrouping sg = make_seed_grouping(mm.pattern, c);
      const DenseMatrix b = compress_parallel(*mm.values, mm.pattern, sg, threads);
      save(files.out, [&](std::ostream& o) { io::write_dense_csv(o, b); });
      save(files.colouring_out, [&](std::ostream& o) { io::write_colouring(o, c); });
      out << "RESULT: OK\n";
      out << "rows: " << b.rows << ", groups: " << b.cols << '\n';
      return kYes;
    }

    if (*hr) {
      std::istringstream in(io::slurp(files.matrix));
      const auto mm = io::read_matrix_market(in, files.matrix);
      std::istringstream bin(io::slurp(files.compressed));
      const DenseMatrix b = io::read_dense_csv(bin, files.compressed);
      const Colouring c = load_colouring(files.colouring, mm.pattern.dimension());
      const SeedGrouping sg = make_seed_grouping(mm.pattern, c);
      const DenseMatrix h = recover_parallel(b, mm.pattern, sg, threads);
      save(files.out, [&](std::ostream& o) { io::write_dense_csv(o, h); });
      if (mm.values) {
        double worst = 0.0;
        for (std::size_t i = 0; i < h.data.size(); ++i) worst = std::max(worst, std::abs(h.data[i] - mm.values->data[i]));
        const bool ok = worst <= 1e-12;
        out << "RESULT: " << (ok ? "VALID" : "INVALID") << '\n';
        out << "max abs error: " << worst << '\n';
        return ok ? kYes : kNo;
      }
      out << "RESULT: OK\n";
      return kYes;
    }
  } catch (const InputError& e) {
    out << "RESULT: ERROR\n";
    err << "input error: " << e.what() << '\n';
    return kUsage;
  }
  out << "RESULT: ERROR\n";
  return kUsage;
}

}  // namespace rsc::cli
