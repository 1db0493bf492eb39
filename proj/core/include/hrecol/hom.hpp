// Copyright 2026 The hrecol Authors
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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hrecol/graph.hpp"

namespace hrecol {

// Image of every source vertex; index = source vertex.
using VertexMap = std::vector<Vertex>;

/// One colour change: `vertex` moves from colour `from` to colour `to`.
struct RecoloringStep {
  Vertex vertex = 0;
  Vertex from = 0;
  Vertex to = 0;

  bool is_noop() const noexcept { return from == to; }
  friend bool operator==(const RecoloringStep&, const RecoloringStep&) = default;
};

/// A start map and a sequence of single-vertex colour changes.
struct RecoloringPath {
  VertexMap start;
  std::vector<RecoloringStep> steps;

  std::size_t size() const noexcept { return steps.size(); }
  bool empty() const noexcept { return steps.empty(); }

  /// Replays the steps onto `start`. Does not validate them.
  VertexMap end() const;

  /// Drops no-op steps. Does not merge consecutive moves of one vertex.
  RecoloringPath normalized() const;

  /// The same walk traversed from end() back to start.
  RecoloringPath reversed() const;

  /// Appends `next`, which must start where this path ends.
  RecoloringPath& append(const RecoloringPath& next);

  friend bool operator==(const RecoloringPath&, const RecoloringPath&) = default;
};

/// A recolouring instance: two homomorphisms g -> h.
struct Instance {
  Graph g;
  Graph h;
  VertexMap alpha;
  VertexMap beta;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws PreconditionError unless g is connected, both graphs are non-empty
/// and alpha, beta are homomorphisms g -> h. The target may be disconnected.
void validate_instance(const Instance& instance);

bool is_homomorphism(const Graph& g, const Graph& h, const VertexMap& map);

/// Whether recolouring `w` to `colour` keeps `map` a homomorphism and the
/// change is an edge of Col(g, h). `map` must already be a homomorphism.
bool is_valid_move(const Graph& g, const Graph& h, const VertexMap& map, Vertex w, Vertex colour);

/// Adjacency in the recolouring graph Col(g, h). Equal homomorphisms are adjacent.
bool col_adjacent(const Graph& g, const Graph& h, const VertexMap& a, const VertexMap& b);

/// Adjacency in Hom(g, h): a(u) ~ b(v) for every edge or loop uv of g, both orientations.
bool hom_adjacent(const Graph& g, const Graph& h, const VertexMap& a, const VertexMap& b);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Calls `visit` for every homomorphism g -> h in lexicographic order of the
/// map vector. The budget bounds the number of partial assignments tried;
/// BudgetExceeded is thrown when it runs out.
void for_each_homomorphism(const Graph& g, const Graph& h,
                           const std::function<void(const VertexMap&)>& visit,
                           std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<VertexMap> enumerate_homomorphisms(const Graph& g, const Graph& h,
                                               std::uint64_t budget = kDefaultEnumerationBudget);

/// Turns a Hom-edge into a Col-path by switching vertices from a to b in
/// ascending order. Throws PreconditionError unless both maps are
/// homomorphisms and hom_adjacent(a, b).
RecoloringPath hom_edge_to_col_path(const Graph& g, const Graph& h, const VertexMap& a,
                                    const VertexMap& b);

/// Outcome of replaying a path. `failed_step` is the index of the first
/// offending step; it is empty when the start map or the end map is at fault.
struct PathCheck {
  bool ok = true;
  std::optional<std::size_t> failed_step;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// Replays `path` in Col(g, h): the start must be a homomorphism, every step
/// a genuine (non no-op) Col-move from the current colour, and the final map
/// must equal `expected_end`.
PathCheck verify_path(const Graph& g, const Graph& h, const RecoloringPath& path,
                      const VertexMap& expected_end);

std::string to_string(const VertexMap& map);

}  // namespace hrecol
