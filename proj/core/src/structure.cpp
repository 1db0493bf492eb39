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

#include "hrecol/structure.hpp"

#include <algorithm>
#include <string>

#include "hrecol/error.hpp"
#include "hrecol/graph_algorithms.hpp"

namespace hrecol {

namespace {

// Domination restricted to the live vertices of g.
bool dominates_alive(const Graph& g, const std::vector<char>& alive, Vertex into, Vertex folded) {
  if (into == folded) return false;
  if (g.has_loop(folded) && !g.adjacent(into, folded)) return false;
  for (Vertex x : g.neighbors(folded)) {
    if (alive[static_cast<std::size_t>(x)] && !g.adjacent(into, x)) return false;
  }
  return true;
}

std::optional<Fold> find_fold_alive(const Graph& g, const std::vector<char>& alive,
                                    const std::vector<char>& foldable) {
  for (Vertex b = g.order() - 1; b >= 0; --b) {
    if (!alive[static_cast<std::size_t>(b)] || !foldable[static_cast<std::size_t>(b)]) continue;
    for (Vertex a = 0; a < g.order(); ++a) {
      if (alive[static_cast<std::size_t>(a)] && dominates_alive(g, alive, a, b)) return Fold{b, a};
    }
  }
  return std::nullopt;
}

DismantlingSequence run_folds(const Graph& g, std::vector<char> foldable) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> alive(n, 1);
  DismantlingSequence seq;
  seq.graph = g;
  while (auto fold = find_fold_alive(g, alive, foldable)) {
    seq.folds.push_back(*fold);
    alive[static_cast<std::size_t>(fold->folded)] = 0;
  }
  seq.retraction.resize(n);
  for (Vertex v = 0; v < g.order(); ++v) {
    seq.retraction[static_cast<std::size_t>(v)] = v;
    if (alive[static_cast<std::size_t>(v)]) seq.remaining.push_back(v);
  }
  // Later folds move targets of earlier ones; resolve back to front.
  for (auto it = seq.folds.rbegin(); it != seq.folds.rend(); ++it) {
    seq.retraction[static_cast<std::size_t>(it->folded)] =
        seq.retraction[static_cast<std::size_t>(it->into)];
  }
  seq.residual = induced_subgraph(g, seq.remaining);
  return seq;
}

}  // namespace

Vertex DismantlingSequence::residual_index(Vertex v) const {
  const auto it = std::lower_bound(remaining.begin(), remaining.end(), v);
  if (it == remaining.end() || *it != v) return -1;
  return static_cast<Vertex>(it - remaining.begin());
}

VertexMap DismantlingSequence::to_residual(const VertexMap& image) const {
  VertexMap out(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    out[i] = residual_index(image[i]);
    if (out[i] < 0) {
      throw PreconditionError("colour " + std::to_string(image[i]) + " is not in the residual graph");
    }
  }
  return out;
}

bool dominates(const Graph& g, Vertex into, Vertex folded) {
  return dominates_alive(g, std::vector<char>(static_cast<std::size_t>(g.order()), 1), into, folded);
}

std::optional<Fold> find_fold(const Graph& g) {
  const std::vector<char> all(static_cast<std::size_t>(g.order()), 1);
  return find_fold_alive(g, all, all);
}

bool is_stiff(const Graph& g) { return !find_fold(g).has_value(); }

DismantlingSequence dismantle(const Graph& g) {
  return run_folds(g, std::vector<char>(static_cast<std::size_t>(g.order()), 1));
}

DismantlingSequence dismantle_onto(const Graph& g, std::span<const Vertex> keep) {
  std::vector<char> foldable(static_cast<std::size_t>(g.order()), 1);
  for (Vertex v : keep) {
    if (v < 0 || v >= g.order()) throw PreconditionError("kept vertex out of range");
    foldable[static_cast<std::size_t>(v)] = 0;
  }
  DismantlingSequence seq = run_folds(g, foldable);
  if (seq.remaining.size() != static_cast<std::size_t>(std::count(foldable.begin(), foldable.end(), 0))) {
    throw PreconditionError("graph '" + g.name() + "' does not dismantle onto the requested subgraph");
  }
  return seq;
}

bool is_valid_dismantling(const DismantlingSequence& seq) {
  const Graph& g = seq.graph;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> alive(n, 1);
  for (const Fold& f : seq.folds) {
    if (f.folded < 0 || f.folded >= g.order() || f.into < 0 || f.into >= g.order()) return false;
    if (!alive[static_cast<std::size_t>(f.folded)] || !alive[static_cast<std::size_t>(f.into)]) {
      return false;
    }
    if (!dominates_alive(g, alive, f.into, f.folded)) return false;
    alive[static_cast<std::size_t>(f.folded)] = 0;
  }
  std::vector<Vertex> remaining;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (alive[static_cast<std::size_t>(v)]) remaining.push_back(v);
  }
  if (remaining != seq.remaining || seq.retraction.size() != n) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!alive[static_cast<std::size_t>(seq.retraction[static_cast<std::size_t>(v)])]) return false;
  }
  return true;
}

FoldImage fold_retraction_path(const Graph& source, const VertexMap& alpha,
                               const DismantlingSequence& seq) {
  const Graph& g = seq.graph;
  if (!is_homomorphism(source, g, alpha)) {
    throw PreconditionError("fold_retraction_path: alpha is not a homomorphism");
  }
  FoldImage out{alpha, RecoloringPath{alpha, {}}};
  for (const Fold& f : seq.folds) {
    if (g.has_loop(f.folded) && !g.adjacent(f.folded, f.into)) {
      throw PreconditionError("looped vertex folded into a non-neighbour");
    }
    for (Vertex u = 0; u < source.order(); ++u) {
      auto& colour = out.image[static_cast<std::size_t>(u)];
      if (colour == f.folded) {
        out.path.steps.push_back({u, f.folded, f.into});
        colour = f.into;
      }
    }
  }
  return out;
}

}  // namespace hrecol
