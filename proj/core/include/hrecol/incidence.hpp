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

#include <span>
#include <vector>

#include "hrecol/graph.hpp"
#include "hrecol/hom.hpp"

namespace hrecol {

/// Vertex-clique incidence graph of a reflexive host H without induced diamonds.
///
/// Side 0 of `incidence` is V(H) with indices preserved. Maximal cliques
/// follow as vertices order()..order()+m-1 in lexicographic order and, when
/// present, one false clique {a} per host vertex a comes last, adjacent to a
/// only. Every edge of H lies in exactly one maximal clique.
class CliqueIncidence {
 public:
  const Graph& host() const noexcept { return host_; }
  const Graph& incidence() const noexcept { return incidence_; }
  bool has_false_cliques() const noexcept { return with_false_; }

  int host_order() const noexcept { return host_.order(); }
  int clique_count() const noexcept { return static_cast<int>(cliques_.size()); }

  bool is_host_vertex(Vertex x) const noexcept { return x >= 0 && x < host_order(); }
  bool is_false_clique(Vertex x) const noexcept {
    return with_false_ && x >= host_order() + clique_count() && x < incidence_.order();
  }
  Vertex false_clique(Vertex a) const;

  /// Members of a clique vertex (true or false clique).
  std::vector<Vertex> members(Vertex clique_vertex) const;
  bool contains(Vertex clique_vertex, Vertex a) const { return incidence_.adjacent(clique_vertex, a); }

  /// The unique maximal clique through the edge ab, or the false clique {a}
  /// when a == b. Throws PreconditionError when a and b are not adjacent, or
  /// when a == b without false cliques.
  Vertex clique_of(Vertex a, Vertex b) const;

  /// Sends each false clique {a} to the least maximal clique containing a;
  /// fixes every other vertex. This is a dismantling retraction B'(H) -> B(H).
  Vertex retract(Vertex x) const;

 private:
  friend CliqueIncidence build_clique_incidence(const Graph& h, bool with_false_cliques);

  Graph host_;
  Graph incidence_;
  bool with_false_ = false;
  std::vector<std::vector<Vertex>> cliques_;
  std::vector<Vertex> edge_clique_;  // host_order^2, -1 when not an edge
  std::vector<Vertex> least_clique_;
};

/// B(h), or B'(h) with false cliques. Throws PreconditionError when h is not
/// reflexive and DiamondError (with a witness) when h has an induced diamond.
CliqueIncidence build_clique_incidence(const Graph& h, bool with_false_cliques);

/// Vertex-edge incidence graph of a reflexive graph G.
///
/// Side 0 is V(G) with indices preserved; the k-th non-loop edge of G (in
/// `source().edges()` order) becomes vertex order()+k. Loops get no vertex.
class EdgeIncidence {
 public:
  const Graph& source() const noexcept { return source_; }
  const Graph& incidence() const noexcept { return incidence_; }
  int source_order() const noexcept { return source_.order(); }

  bool is_edge_vertex(Vertex x) const noexcept {
    return x >= source_order() && x < incidence_.order();
  }
  const Edge& edge(Vertex edge_vertex) const {
    return source_.edges()[static_cast<std::size_t>(edge_vertex - source_order())];
  }
  Vertex edge_vertex(Vertex u, Vertex v) const;

 private:
  friend EdgeIncidence build_edge_incidence(const Graph& g);

  Graph source_;
  Graph incidence_;
};

/// Throws PreconditionError when g is not reflexive.
EdgeIncidence build_edge_incidence(const Graph& g);

/// The lift alpha^K: E(g) -> B'(h), equal to alpha on V(g) and sending each
/// edge-vertex (uv) to the clique of alpha(u)alpha(v).
VertexMap lift_hom(const VertexMap& alpha, const EdgeIncidence& ei, const CliqueIncidence& ci);

/// Restriction of sigma: E(g) -> B'(h) to V(g). Throws PreconditionError when
/// sigma sends a vertex of g to a clique vertex, or the result is not a
/// homomorphism g -> h.
VertexMap restrict_hom(const VertexMap& sigma, const EdgeIncidence& ei, const CliqueIncidence& ci);

/// Expands one Col(g, h) move of vertex u into a path from alpha^K to beta^K
/// in Col(E(g), B'(h)), of length at most deg(u) + 1:
///   1. every edge-vertex (uv) whose target clique already contains alpha(u)
///      moves to its target;
///   2. u moves;
///   3. the remaining edge-vertices at u move to their targets.
RecoloringPath expand_move(const VertexMap& alpha, const RecoloringStep& step,
                           const EdgeIncidence& ei, const CliqueIncidence& ci);

/// Concatenation of expand_move over the steps of a Col(g, h) path.
RecoloringPath transfer_path_forward(const RecoloringPath& path, const EdgeIncidence& ei,
                                     const CliqueIncidence& ci);

/// Restriction of a Col(E(g), B'(h)) path to V(g): edge-vertex steps are
/// dropped.
RecoloringPath transfer_path_backward(const RecoloringPath& path, const EdgeIncidence& ei,
                                      const CliqueIncidence& ci);

/// Composes every state of a Col(E(g), B'(h)) path with the false-clique
/// retraction, giving a path in Col(E(g), B(h)). Indices below
/// host_order() + clique_count() are shared between B'(h) and B(h).
RecoloringPath retract_false_cliques(const RecoloringPath& path, const CliqueIncidence& ci);
VertexMap retract_false_cliques(const VertexMap& sigma, const CliqueIncidence& ci);

}  // namespace hrecol
