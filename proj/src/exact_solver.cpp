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

#include "rsc/exact_solver.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstring>
#include <numeric>

namespace rsc {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask low_bits(int count) { return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1; }

// Shared accounting across every search spawned by one solver call.
struct BudgetState {
  std::uint64_t max_nodes;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::atomic<bool> solved{false};

  explicit BudgetState(const SolveBudget& b)
      : max_nodes(b.max_nodes),
        deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(b.time_limit_s))) {}
};

// Domains for proper and rs colourings, maintained through per-vertex counts
// of coloured neighbours in each colour class. For an uncoloured u the
// returned mask is exactly the set of colours d such that colouring u with d
// keeps the partial colouring valid.
class MaskEngine {
 public:
  MaskEngine(const Graph& g, int k, bool rs)
      : g_(&g), k_(k), rs_(rs), colour_(g.num_vertices(), kUncoloured),
        count_(g.num_vertices() * static_cast<std::size_t>(k), 0),
        present_(g.num_vertices(), 0), repeated_(g.num_vertices(), 0) {}

  [[nodiscard]] Colour colour(VertexId v) const { return colour_[v]; }
  [[nodiscard]] const std::vector<Colour>& colours() const { return colour_; }

  [[nodiscard]] Mask domain(VertexId u) const {
    Mask mask = low_bits(k_) & ~present_[u];
    if (!rs_) return mask;
    if (repeated_[u]) mask &= low_bits(std::countr_zero(repeated_[u]));
    for (VertexId w : g_->neighbours(u)) {
      const Colour e = colour_[w];
      if (e > 0) mask &= ~(present_[w] & low_bits(e));
    }
    return mask;
  }

  void assign(VertexId u, Colour d) {
    colour_[u] = d;
    const Mask bit = Mask{1} << d;
    for (VertexId w : g_->neighbours(u)) {
      std::uint8_t& c = count_[w * static_cast<std::size_t>(k_) + d];
      ++c;
      if (c == 1) present_[w] |= bit;
      else if (c == 2) repeated_[w] |= bit;
    }
  }

  void unassign(VertexId u, Colour d) {
    colour_[u] = kUncoloured;
    const Mask bit = Mask{1} << d;
    for (VertexId w : g_->neighbours(u)) {
      std::uint8_t& c = count_[w * static_cast<std::size_t>(k_) + d];
      --c;
      if (c == 0) present_[w] &= ~bit;
      else if (c == 1) repeated_[w] &= ~bit;
    }
  }

 private:
  const Graph* g_;
  int k_;
  bool rs_;
  std::vector<Colour> colour_;
  std::vector<std::uint8_t> count_;
  std::vector<Mask> present_;   // colours with >= 1 coloured neighbour
  std::vector<Mask> repeated_;  // colours with >= 2 coloured neighbours
};

// Star and ordered colourings: a candidate colour is tried tentatively and the
// part of the partial colouring around the vertex is re-verified. Both checks
// are sound for pruning because a violation among coloured vertices survives
// every extension.
class CheckEngine {
 public:
  CheckEngine(const Graph& g, int k, ColouringKind kind)
      : g_(&g), k_(k), kind_(kind), colour_(g.num_vertices(), kUncoloured),
        mark_(g.num_vertices(), 0) {}

  [[nodiscard]] Colour colour(VertexId v) const { return colour_[v]; }
  [[nodiscard]] const std::vector<Colour>& colours() const { return colour_; }

  [[nodiscard]] Mask domain(VertexId u) {
    Mask mask = low_bits(k_);
    for (VertexId w : g_->neighbours(u)) {
      if (colour_[w] != kUncoloured) mask &= ~(Mask{1} << colour_[w]);
    }
    for (Mask m = mask; m; m &= m - 1) {
      const Colour d = std::countr_zero(m);
      colour_[u] = d;
      const bool ok = kind_ == ColouringKind::star ? star_ok(u) : ordered_ok(u);
      colour_[u] = kUncoloured;
      if (!ok) mask &= ~(Mask{1} << d);
    }
    return mask;
  }

  void assign(VertexId u, Colour d) { colour_[u] = d; }
  void unassign(VertexId u, Colour) { colour_[u] = kUncoloured; }

 private:
  std::size_t count_coloured(VertexId v, Colour c, VertexId except) const {
    std::size_t n = 0;
    for (VertexId w : g_->neighbours(v)) n += (w != except && colour_[w] == c);
    return n;
  }

  // A bicoloured P4 a,b,c,d among coloured vertices exists iff some edge bc
  // has another neighbour of b coloured like c and another neighbour of c
  // coloured like b. New P4s through u use an edge touching N[u].
  bool star_ok(VertexId u) const {
    auto edge_ok = [&](VertexId b, VertexId c) {
      if (colour_[b] == kUncoloured || colour_[c] == kUncoloured) return true;
      return count_coloured(b, colour_[c], c) == 0 || count_coloured(c, colour_[b], b) == 0;
    };
    for (VertexId b : g_->neighbours(u)) {
      if (!edge_ok(u, b)) return false;
      if (colour_[b] == kUncoloured) continue;
      for (VertexId c : g_->neighbours(b)) {
        if (c != u && !edge_ok(b, c)) return false;
      }
    }
    return true;
  }

  // For every threshold e >= colour(u), the component of u among coloured
  // vertices with colour <= e holds at most one vertex of colour e.
  bool ordered_ok(VertexId u) {
    const Colour base = colour_[u];
    Mask thresholds = 0;
    for (Colour c : colour_) {
      if (c >= base) thresholds |= Mask{1} << c;
    }
    for (Mask m = thresholds; m; m &= m - 1) {
      const Colour e = std::countr_zero(m);
      ++stamp_;
      if (stamp_ == 0) {
        std::fill(mark_.begin(), mark_.end(), 0);
        stamp_ = 1;
      }
      stack_.assign(1, u);
      mark_[u] = stamp_;
      int top = 0;
      while (!stack_.empty()) {
        VertexId v = stack_.back();
        stack_.pop_back();
        if (colour_[v] == e && ++top > 1) return false;
        for (VertexId w : g_->neighbours(v)) {
          if (mark_[w] != stamp_ && colour_[w] != kUncoloured && colour_[w] <= e) {
            mark_[w] = stamp_;
            stack_.push_back(w);
          }
        }
      }
    }
    return true;
  }

  const Graph* g_;
  int k_;
  ColouringKind kind_;
  std::vector<Colour> colour_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<VertexId> stack_;
};

enum class Outcome { found, exhausted, aborted };

template <class Engine>
class Search {
 public:
  Search(const Graph& g, Engine& engine, bool symmetry, BudgetState& budget)
      : g_(g), e_(engine), symmetry_(symmetry), budget_(budget) {}

  void set_max_used(Colour c) { max_used_ = c; }

  // Picks the uncoloured vertex with the fewest remaining colours (ties: larger
  // degree, then lower index). Returns kNoVertex if all are coloured; sets
  // `dead` if some vertex has no colour left.
  VertexId choose(Mask& out_mask, bool& dead) {
    dead = false;
    VertexId best = kNoVertex;
    int best_count = 65;
    for (VertexId u = 0; u < g_.num_vertices(); ++u) {
      if (e_.colour(u) != kUncoloured) continue;
      Mask mask = e_.domain(u);
      if (symmetry_) mask &= low_bits(max_used_ + 2);
      const int count = std::popcount(mask);
      if (count == 0) {
        dead = true;
        return u;
      }
      if (count < best_count || (count == best_count && g_.degree(u) > g_.degree(best))) {
        best = u;
        best_count = count;
        out_mask = mask;
      }
    }
    return best;
  }

  Outcome run() {
    Mask mask = 0;
    bool dead = false;
    const VertexId u = choose(mask, dead);
    if (dead) return Outcome::exhausted;
    if (u == kNoVertex) {
      witness_ = e_.colours();
      return Outcome::found;
    }
    for (; mask; mask &= mask - 1) {
      if (!tick()) return Outcome::aborted;
      const Colour d = std::countr_zero(mask);
      const Colour saved = max_used_;
      max_used_ = std::max(max_used_, d);
      e_.assign(u, d);
      const Outcome o = run();
      e_.unassign(u, d);
      max_used_ = saved;
      if (o != Outcome::exhausted) return o;
    }
    return Outcome::exhausted;
  }

  void flush() {
    budget_.nodes.fetch_add(pending_, std::memory_order_relaxed);
    pending_ = 0;
  }

  [[nodiscard]] const std::vector<Colour>& witness() const { return witness_; }
  [[nodiscard]] std::uint64_t local_nodes() const { return local_; }

 private:
  bool tick() {
    ++local_;
    if (++pending_ < 256) return true;
    const std::uint64_t total = budget_.nodes.fetch_add(pending_, std::memory_order_relaxed) + pending_;
    pending_ = 0;
    if (budget_.solved.load(std::memory_order_relaxed)) return false;
    if (total >= budget_.max_nodes || Clock::now() >= budget_.deadline) {
      budget_.exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  const Graph& g_;
  Engine& e_;
  bool symmetry_;
  BudgetState& budget_;
  Colour max_used_ = -1;
  std::uint64_t pending_ = 0;
  std::uint64_t local_ = 0;
  std::vector<Colour> witness_;
};

using Prefix = std::vector<std::pair<VertexId, Colour>>;

template <class Engine>
SolveResult solve_with(const Graph& g, int k, Engine base, bool symmetry, const SolveOptions& options) {
  SolveResult result;
  BudgetState budget(options.budget);

  Colour max_used = -1;
  if (options.precolouring) {
    const auto& pre = *options.precolouring;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (!pre.is_set(v)) continue;
      if (!(base.domain(v) & (Mask{1} << pre[v]))) return result;  // inconsistent precolouring
      base.assign(v, pre[v]);
      max_used = std::max(max_used, pre[v]);
    }
  }

  auto finish = [&](Outcome o, const std::vector<Colour>& colours) {
    result.nodes = budget.nodes.load();
    if (o == Outcome::found) {
      result.verdict = Verdict::yes;
      result.witness = Colouring(colours, k);
    } else if (budget.exhausted.load()) {
      result.verdict = Verdict::budget_exceeded;
    } else {
      result.verdict = Verdict::no;
    }
    return result;
  };

  if (options.threads <= 1) {
    Search<Engine> search(g, base, symmetry, budget);
    search.set_max_used(max_used);
    const Outcome o = search.run();
    search.flush();
    return finish(o, search.witness());
  }

  // Expand the top of the search tree breadth-first until there is enough
  // independent work, then hand the subtrees to OpenMP threads.
  std::vector<Prefix> frontier{Prefix{}};
  const std::size_t want = static_cast<std::size_t>(options.threads) * 8;
  for (int depth = 0; depth < 6 && frontier.size() < want; ++depth) {
    std::vector<Prefix> next;
    for (const auto& prefix : frontier) {
      Engine e = base;
      Colour mu = max_used;
      for (auto [v, c] : prefix) {
        e.assign(v, c);
        mu = std::max(mu, c);
      }
      Search<Engine> probe(g, e, symmetry, budget);
      probe.set_max_used(mu);
      Mask mask = 0;
      bool dead = false;
      const VertexId u = probe.choose(mask, dead);
      if (dead) continue;
      if (u == kNoVertex) {
        return finish(Outcome::found, e.colours());
      }
      for (; mask; mask &= mask - 1) {
        Prefix p = prefix;
        p.emplace_back(u, std::countr_zero(mask));
        next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) return finish(Outcome::exhausted, {});
  }

  std::vector<Colour> witness;
  const auto tasks = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.threads)
  for (std::int64_t i = 0; i < tasks; ++i) {
    if (budget.solved.load() || budget.exhausted.load()) continue;
    Engine e = base;
    Colour mu = max_used;
    for (auto [v, c] : frontier[static_cast<std::size_t>(i)]) {
      e.assign(v, c);
      mu = std::max(mu, c);
    }
    Search<Engine> search(g, e, symmetry, budget);
    search.set_max_used(mu);
    const Outcome o = search.run();
    search.flush();
    if (o == Outcome::found && !budget.solved.exchange(true)) {
#pragma omp critical(rsc_solver_witness)
      witness = search.witness();
    }
  }
  if (budget.solved.load()) return finish(Outcome::found, witness);
  return finish(Outcome::exhausted, {});
}

}  // namespace

SolveResult decide_k_colouring(const Graph& g, int k, ColouringKind kind, const SolveOptions& options) {
  if (k < 0 || k > kMaxSolverColours) {
    throw InputError("colour count must lie in [0," + std::to_string(kMaxSolverColours) + "]");
  }
  if (options.budget.max_nodes == 0 || options.budget.time_limit_s <= 0) {
    throw InputError("solve budget must be positive");
  }
  if (options.precolouring) {
    if (options.precolouring->size() != g.num_vertices()) throw InputError("precolouring size mismatch");
    for (Colour c : options.precolouring->colours()) {
      if (c != kUncoloured && c >= k) throw InputError("precolour not below k");
    }
  }
  const bool value_symmetric = kind == ColouringKind::proper || kind == ColouringKind::star;
  const bool symmetry = options.symmetry_breaking && value_symmetric && !options.precolouring;
  switch (kind) {
    case ColouringKind::proper:
      return solve_with(g, k, MaskEngine(g, k, false), symmetry, options);
    case ColouringKind::rs:
      return solve_with(g, k, MaskEngine(g, k, true), symmetry, options);
    case ColouringKind::star:
    case ColouringKind::ordered:
      return solve_with(g, k, CheckEngine(g, k, kind), symmetry, options);
  }
  return {};
}

ChromaticResult chromatic_number(const Graph& g, ColouringKind kind, const SolveBudget& budget) {
  ChromaticResult out;
  const std::size_t n = g.num_vertices();
  if (n == 0) {
    out.witness = Colouring({}, 0);
    return out;
  }
  const auto start = Clock::now();
  int k = g.num_edges() > 0 ? 2 : 1;
  for (; k <= kMaxSolverColours; ++k) {
    SolveOptions opts;
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.nodes >= budget.max_nodes || elapsed >= budget.time_limit_s) {
      out.verdict = Verdict::budget_exceeded;
      return out;
    }
    opts.budget.max_nodes = budget.max_nodes - out.nodes;
    opts.budget.time_limit_s = budget.time_limit_s - elapsed;
    SolveResult r = decide_k_colouring(g, k, kind, opts);
    out.nodes += r.nodes;
    if (r.verdict == Verdict::budget_exceeded) {
      out.verdict = Verdict::budget_exceeded;
      return out;
    }
    if (r.verdict == Verdict::yes) {
      out.value = k;
      out.witness = std::move(r.witness);
      return out;
    }
  }
  throw InputError("chromatic number exceeds the solver's colour limit");
}

namespace {

class MisSearch {
 public:
  MisSearch(const Graph& g, const SolveBudget& budget)
      : g_(g), max_nodes_(budget.max_nodes),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget.time_limit_s))) {}

  bool run(std::vector<VertexId> candidates) {
    if (aborted_) return false;
    if (++nodes_ % 1024 == 0 && (nodes_ >= max_nodes_ || Clock::now() >= deadline_)) {
      aborted_ = true;
      return false;
    }
    if (current_.size() + candidates.size() <= best_.size()) return true;
    if (candidates.empty()) {
      best_ = current_;
      return true;
    }
    // Degree inside the candidate set. A vertex of degree <= 1 there belongs
    // to some maximum independent set of the remaining graph, so take it.
    std::vector<bool> in(g_.num_vertices(), false);
    for (VertexId v : candidates) in[v] = true;
    VertexId pick = kNoVertex;
    std::size_t pick_deg = 0;
    bool forced = false;
    for (VertexId v : candidates) {
      std::size_t d = 0;
      for (VertexId w : g_.neighbours(v)) d += in[w];
      if (d <= 1) {
        pick = v;
        forced = true;
        break;
      }
      if (pick == kNoVertex || d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    std::vector<VertexId> rest;
    for (VertexId v : candidates) {
      if (v != pick && !g_.has_edge(v, pick)) rest.push_back(v);
    }
    current_.push_back(pick);
    run(std::move(rest));
    current_.pop_back();
    if (forced) return !aborted_;
    std::vector<VertexId> without;
    for (VertexId v : candidates) {
      if (v != pick) without.push_back(v);
    }
    return run(std::move(without));
  }

  [[nodiscard]] const std::vector<VertexId>& best() const { return best_; }
  [[nodiscard]] bool aborted() const { return aborted_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  const Graph& g_;
  std::uint64_t max_nodes_;
  Clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
};

}  // namespace

IndependentSetResult max_independent_set(const Graph& g, const SolveBudget& budget) {
  MisSearch search(g, budget);
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  search.run(std::move(all));
  IndependentSetResult out;
  out.nodes = search.nodes();
  if (search.aborted()) {
    out.verdict = Verdict::budget_exceeded;
    return out;
  }
  out.vertices = search.best();
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

const char* to_string(ColouringKind kind) noexcept {
  switch (kind) {
    case ColouringKind::proper: return "proper";
    case ColouringKind::rs: return "rs";
    case ColouringKind::star: return "star";
    case ColouringKind::ordered: return "ordered";
  }
  return "?";
}

const char* to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

}  // namespace rsc
