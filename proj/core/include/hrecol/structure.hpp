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

#include <optional>
#include <span>
#include <vector>

#include "hrecol/graph.hpp"
#include "hrecol/hom.hpp"

namespace hrecol {

/// Vertex `folded` is dominated by `into`: every neighbour of `folded`
/// (itself included when looped) is a neighbour of `into`.
struct Fold {
  Vertex folded = 0;
  Vertex into = 0;

  friend bool operator==(const Fold&, const Fold&) = default;
};

/// A sequence of dismantling retractions applied to `graph`.
///
/// Vertices keep their original indices throughout: `remaining` lists the
/// residual vertices ascending, and `retraction` sends every original vertex
/// to the residual vertex it ends up folded onto. `residual` is the induced
/// subgraph on `remaining`, renumbered 0..k-1 and labelled by original index.
struct DismantlingSequence {
  Graph graph;
  std::vector<Fold> folds;
  std::vector<Vertex> remaining;
  std::vector<Vertex> retraction;
  Graph residual;

  /// Position of original vertex v inside `residual`, or -1 when folded away.
  Vertex residual_index(Vertex v) const;
  /// Rewrites a map into `graph` whose image lies in `remaining` as a map into `residual`.
  VertexMap to_residual(const VertexMap& image) const;
};

bool dominates(const Graph& g, Vertex into, Vertex folded);

/// The fold with the highest-index dominated vertex, folded into its
/// lowest-index dominator; nullopt when g is stiff.
std::optional<Fold> find_fold(const Graph& g);
bool is_stiff(const Graph& g);

/// Greedy dismantling with find_fold's order until the residual is stiff.
DismantlingSequence dismantle(const Graph& g);

/// Dismantles g onto the subgraph induced by `keep`, folding only vertices
/// outside it (same order as find_fold). Throws PreconditionError when some
/// vertex outside `keep` can never be folded.
DismantlingSequence dismantle_onto(const Graph& g, std::span<const Vertex> keep);

/// Checks that every fold is valid in the graph remaining at its turn and
/// that the bookkeeping fields agree with the folds.
bool is_valid_dismantling(const DismantlingSequence& seq);

struct FoldImage {
  VertexMap image;      // homomorphism into the residual, original indices
  RecoloringPath path;  // in Col(source, seq.graph), from alpha to image
};

/// For each fold b -> a in order, recolours every source vertex currently
/// mapped to b onto a, in ascending vertex order.
FoldImage fold_retraction_path(const Graph& source, const VertexMap& alpha,
                               const DismantlingSequence& seq);

}  // namespace hrecol
