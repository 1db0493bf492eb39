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

#include "hrecol/graph.hpp"
#include "hrecol/graph_algorithms.hpp"
#include "hrecol/hom.hpp"

namespace hrecol {

// Index of (a, side) in h x K2.
constexpr Vertex product_vertex(Vertex a, int side) noexcept { return a * 2 + side; }
constexpr Vertex product_base(Vertex x) noexcept { return x / 2; }
constexpr int product_side(Vertex x) noexcept { return x % 2; }

Graph k2();

/// h x K2, whose K2 coordinate is a bipartition of it (see product_sides).
Graph product_with_k2(const Graph& h);
/// Bipartition of h x K2 (for any h) by the K2 coordinate.
Bipartition product_sides(const Graph& h);

/// alpha'(u) = (alpha(u), side(u)).
VertexMap product_lift(const VertexMap& alpha, const Bipartition& sides);
RecoloringPath product_lift(const RecoloringPath& path, const Bipartition& sides);

/// Lifts a bipartite instance of Recol(h) to Recol(h x K2). Throws
/// PreconditionError unless g is connected and bipartite.
Instance product_lift(const Instance& instance);

/// Drops the K2 coordinate.
VertexMap product_project(const VertexMap& map);
RecoloringPath product_project(const RecoloringPath& path);

/// Replaces one Col(g, h) move by a path of length at most two in Col(g°, h)
/// for reflexive square-free h. When the two colours at the moved vertex w
/// are not adjacent, routes through the least colour c adjacent to both and
/// to the colours of all neighbours of w. Throws PreconditionError when the
/// maps are not Col-adjacent or no such c exists.
RecoloringPath expand_move_reflexive(const Graph& g, const Graph& h, const VertexMap& alpha,
                                     const VertexMap& beta);

/// Rewrites a path S in Col(g, (h x K2)°) whose endpoints keep every vertex of
/// g on its side into a path in Col(g, h x K2) with the same endpoints:
///   - a move onto the right side is replayed as is;
///   - a move from the right side to the wrong side is skipped;
///   - a move between two wrong-side colours a, c becomes a move to the
///     unique common neighbour of a and c in h x K2.
/// Colours are classified along S itself while the rewritten map is tracked
/// separately. `g_sides` and `target_sides` are bipartitions of g and h x K2;
/// if the start map sends side 0 of g to side 1, the sides are swapped first.
/// The result is normalised (no-op steps removed).
RecoloringPath unloop_sequence(const RecoloringPath& s, const Graph& g, const Graph& target,
                               const Bipartition& g_sides, const Bipartition& target_sides);

/// Recol(h) on a connected bipartite g, as an instance of Recol((h x K2)°).
Instance bipartite_irreflexive_to_reflexive(const Instance& instance);

}  // namespace hrecol
