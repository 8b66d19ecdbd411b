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

#include <cstdint>
#include <optional>
#include <vector>

#include "rsc/colouring.hpp"
#include "rsc/graph.hpp"

namespace rsc {

/// Colouring variants the backtracking solver understands.
enum class ColouringKind { proper, rs, star, ordered };

/// Hard limits for one solver call. Both must be positive.
struct SolveBudget {
  std::uint64_t max_nodes = 10'000'000;
  double time_limit_s = 120.0;
};

enum class Verdict { yes, no, budget_exceeded };

struct SolveResult {
  Verdict verdict = Verdict::no;
  std::optional<Colouring> witness;  ///< set iff verdict == yes
  std::uint64_t nodes = 0;           ///< colour assignments tried
};

struct SolveOptions {
  SolveBudget budget{};
  const PartialColouring* precolouring = nullptr;
  /// Root-level work splitting across OpenMP threads; 1 runs serially.
  int threads = 1;
  /// Quotient colour-value permutations. Honoured only for the proper and star
  /// variants (colour values carry order for rs and ordered colourings) and
  /// only without a precolouring.
  bool symmetry_breaking = true;
};

/// Largest k the solver accepts (colour domains are 64-bit masks).
inline constexpr int kMaxSolverColours = 64;

/// Decides whether g has a k-colouring of the given kind extending the
/// precolouring. A "no" is an exhaustive refutation; running out of budget is
/// reported as budget_exceeded, never as "no".
[[nodiscard]] SolveResult decide_k_colouring(const Graph& g, int k, ColouringKind kind,
                                             const SolveOptions& options = {});

[[nodiscard]] inline SolveResult decide_k_rs(const Graph& g, int k, const SolveOptions& options = {}) {
  return decide_k_colouring(g, k, ColouringKind::rs, options);
}

struct ChromaticResult {
  Verdict verdict = Verdict::yes;  ///< yes, or budget_exceeded
  int value = 0;
  std::optional<Colouring> witness;
  std::uint64_t nodes = 0;
};

/// Least k accepted by decide_k_colouring. The budget covers all k tried.
[[nodiscard]] ChromaticResult chromatic_number(const Graph& g, ColouringKind kind,
                                               const SolveBudget& budget = {});
[[nodiscard]] inline ChromaticResult rs_chromatic_number(const Graph& g, const SolveBudget& b = {}) {
  return chromatic_number(g, ColouringKind::rs, b);
}
[[nodiscard]] inline ChromaticResult star_chromatic_number(const Graph& g, const SolveBudget& b = {}) {
  return chromatic_number(g, ColouringKind::star, b);
}
[[nodiscard]] inline ChromaticResult ordered_chromatic_number(const Graph& g, const SolveBudget& b = {}) {
  return chromatic_number(g, ColouringKind::ordered, b);
}

struct IndependentSetResult {
  Verdict verdict = Verdict::yes;  ///< yes, or budget_exceeded
  std::vector<VertexId> vertices;  ///< sorted ascending
  std::uint64_t nodes = 0;
};

/// A maximum independent set by branch and bound.
[[nodiscard]] IndependentSetResult max_independent_set(const Graph& g, const SolveBudget& budget = {});

[[nodiscard]] const char* to_string(ColouringKind kind) noexcept;
[[nodiscard]] const char* to_string(Verdict verdict) noexcept;

}  // namespace rsc
