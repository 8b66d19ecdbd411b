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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsc/graph.hpp"

namespace rsc {

using Colour = int;
inline constexpr Colour kUncoloured = -1;

/// Total map vertex -> colour in {0, ..., k-1}.
class Colouring {
 public:
  Colouring() = default;
  /// Throws InputError if some colour lies outside [0, k).
  Colouring(std::vector<Colour> colours, int k);
  /// k is taken as max colour + 1 (0 for the empty colouring).
  static Colouring inferred(std::vector<Colour> colours);

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] std::size_t size() const noexcept { return colours_.size(); }
  [[nodiscard]] Colour operator[](VertexId v) const { return colours_[v]; }
  [[nodiscard]] std::span<const Colour> colours() const noexcept { return colours_; }
  /// Number of distinct colour values in use.
  [[nodiscard]] int used_colours() const;
  /// Vertices of each colour class, index = colour.
  [[nodiscard]] std::vector<std::vector<VertexId>> classes() const;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::vector<Colour> colours_;
  int k_ = 0;
};

/// Map vertex -> optional colour (kUncoloured when unset) with a budget k.
class PartialColouring {
 public:
  PartialColouring() = default;
  PartialColouring(std::size_t n, int k) : colours_(n, kUncoloured), k_(k) {}

  void set(VertexId v, Colour c);
  [[nodiscard]] Colour operator[](VertexId v) const { return colours_[v]; }
  [[nodiscard]] bool is_set(VertexId v) const { return colours_[v] != kUncoloured; }
  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] std::size_t size() const noexcept { return colours_.size(); }
  [[nodiscard]] std::span<const Colour> colours() const noexcept { return colours_; }

  /// True when `c` is total on the same vertex set and agrees on every set vertex.
  [[nodiscard]] bool extended_by(const Colouring& c) const;

 private:
  std::vector<Colour> colours_;
  int k_ = 0;
};

/// What went wrong in a rejected colouring. For a monochromatic edge the
/// witness holds its two endpoints; for a bicoloured P3 x, y, z it holds the
/// path with c(y) > c(x) = c(z).
struct RsViolation {
  enum class Kind { improper_edge, bicoloured_p3 };
  Kind kind;
  std::vector<VertexId> path;
};

[[nodiscard]] bool is_proper(const Graph& g, const Colouring& c);

/// Proper, and every vertex has at most one neighbour in each lower colour
/// class. A P3 witness is preferred over a monochromatic edge when both exist.
[[nodiscard]] std::optional<RsViolation> find_rs_violation(const Graph& g, const Colouring& c);
[[nodiscard]] inline bool is_rs(const Graph& g, const Colouring& c) {
  return !find_rs_violation(g, c).has_value();
}

/// Proper, and every two colour classes induce a star forest.
[[nodiscard]] bool is_star(const Graph& g, const Colouring& c);

/// Proper, and for every colour i each component of G[{v : c(v) <= i}] holds
/// at most one vertex of colour i.
[[nodiscard]] bool is_ordered(const Graph& g, const Colouring& c);

/// Any two vertices at distance one or two get different colours.
[[nodiscard]] bool is_distance_two(const Graph& g, const Colouring& c);

/// Outcome of the structural properties every 3-rs colouring satisfies.
struct PropertyReport {
  struct Item {
    std::string name;
    bool pass = true;
    std::vector<VertexId> witness;
  };
  std::array<Item, 5> items{Item{"P1", true, {}}, Item{"P2", true, {}}, Item{"P3", true, {}}, Item{"P4", true, {}}, Item{"P6", true, {}}};

  [[nodiscard]] bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

/// Checks P1 (3-plus vertices binary coloured), P2 (adjacent 3-plus vertices
/// opposite), P3 (no P3 with both ends 0), P4 (no P4 with ends 0 and 1) and
/// P6 (no P6 with both ends 0). Throws InputError unless c is a 3-rs colouring.
[[nodiscard]] PropertyReport check_properties(const Graph& g, const Colouring& c);

}  // namespace rsc
