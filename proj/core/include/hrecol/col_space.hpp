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
#include <optional>
#include <span>
#include <vector>

#include "hrecol/detail/state_table.hpp"
#include "hrecol/graph.hpp"
#include "hrecol/hom.hpp"

namespace hrecol {

inline constexpr std::size_t kDefaultColStateBudget = 1'000'000;

/// Explicit recolouring graph Col(g, h), or the part of it reachable from a
/// set of seed homomorphisms.
///
/// States are numbered in discovery order. Each component carries a BFS tree
/// rooted at its first state, which yields a witness path between any two
/// states of the component (not necessarily a shortest one).
class ColSpace {
 public:
  /// Every homomorphism g -> h; components are discovered in lexicographic order.
  static ColSpace full(const Graph& g, const Graph& h,
                       std::size_t state_budget = kDefaultColStateBudget);

  /// Only the components containing `seeds`. Seeds must be homomorphisms.
  static ColSpace explore(const Graph& g, const Graph& h, std::span<const VertexMap> seeds,
                          std::size_t state_budget = kDefaultColStateBudget);

  const Graph& source() const noexcept { return g_; }
  const Graph& target() const noexcept { return h_; }

  std::size_t size() const noexcept { return table_.size(); }
  VertexMap state(std::size_t i) const;
  std::optional<std::size_t> index_of(const VertexMap& map) const { return table_.find(map); }

  // Indices of the states one recolouring move away from i.
  std::span<const std::size_t> moves(std::size_t i) const {
    return {targets_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t move_count() const noexcept { return targets_.size(); }

  std::size_t component(std::size_t i) const { return component_[i]; }
  std::size_t component_count() const noexcept { return component_count_; }
  bool connected(std::size_t i, std::size_t j) const { return component_[i] == component_[j]; }

  /// Witness path from state i to state j through the component's BFS tree.
  /// Throws PreconditionError when they lie in different components.
  RecoloringPath path(std::size_t i, std::size_t j) const;

 private:
  ColSpace(const Graph& g, const Graph& h);
  void grow_from(std::size_t seed, std::size_t state_budget);

  Graph g_;
  Graph h_;
  detail::StateTable table_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::size_t> targets_;
  std::vector<std::size_t> component_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> depth_;
  std::size_t component_count_ = 0;
};

/// Col(g, h) as a plain graph: one vertex per homomorphism, labelled by its
/// map vector, edges for single-vertex moves. Loops (the trivial self
/// adjacency of every state) are omitted. Throws BudgetExceeded when
/// |V(h)|^|V(g)| exceeds `cap`.
Graph export_col_graph(const Graph& g, const Graph& h, std::size_t cap = 5000);

}  // namespace hrecol
