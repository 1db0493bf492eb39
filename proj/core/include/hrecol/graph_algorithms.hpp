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

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hrecol/graph.hpp"

namespace hrecol {

// side[v] is 0 or 1; every edge joins opposite sides.
struct Bipartition {
  std::vector<int> side;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

bool is_reflexive(const Graph& g);    // every vertex carries a loop
bool is_irreflexive(const Graph& g);  // no vertex carries a loop
bool is_connected(const Graph& g);    // false for the empty graph

/// No four distinct vertices a, b, c, d with a~b~c~d~a. Loops are ignored.
bool is_square_free(const Graph& g);

/// Returns {u, v, x, y}: uv is an edge, x and y are adjacent to both u and v,
/// and x is not adjacent to y. Loops are ignored.
std::optional<std::array<Vertex, 4>> find_induced_diamond(const Graph& g);
bool has_induced_diamond(const Graph& g);

/// Two-colouring with the least vertex of every component on side 0, or
/// nullopt when a loop or an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

/// Categorical product. Vertex (i, j) has index i * b.order() + j and a loop
/// iff both i and j have loops; adjacency uses closed neighbourhoods.
Graph tensor_product(const Graph& a, const Graph& b);

Graph reflexive_closure(const Graph& g);

/// Subgraph induced on `keep` (in the given order), renumbered 0..k-1.
/// Each kept vertex is labelled with its original label, or its original
/// index when unlabelled.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Inclusion-maximal cliques of the loop-free adjacency, each sorted, the
/// list sorted lexicographically. Isolated vertices appear as singletons.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

}  // namespace hrecol
