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

#include "hrecol/col_space.hpp"

#include <algorithm>
#include <string>

#include "hrecol/error.hpp"

namespace hrecol {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

ColSpace::ColSpace(const Graph& g, const Graph& h)
    : g_(g), h_(h), table_(static_cast<std::size_t>(g.order())) {}

ColSpace ColSpace::full(const Graph& g, const Graph& h, std::size_t state_budget) {
  ColSpace space(g, h);
  std::vector<VertexMap> seeds;
  for_each_homomorphism(g, h, [&](const VertexMap& m) {
    if (seeds.size() >= state_budget) {
      throw BudgetExceeded("Col(g, h) has more than " + std::to_string(state_budget) + " states");
    }
    seeds.push_back(m);
  });
  for (const auto& seed : seeds) {
    auto [index, inserted] = space.table_.insert(seed);
    if (inserted) {
      space.component_.push_back(space.component_count_++);
      space.parent_.push_back(kNone);
      space.depth_.push_back(0);
      space.grow_from(index, state_budget);
    }
  }
  return space;
}

ColSpace ColSpace::explore(const Graph& g, const Graph& h, std::span<const VertexMap> seeds,
                           std::size_t state_budget) {
  ColSpace space(g, h);
  for (const auto& seed : seeds) {
    if (!is_homomorphism(g, h, seed)) {
      throw PreconditionError("seed " + to_string(seed) + " is not a homomorphism");
    }
    auto [index, inserted] = space.table_.insert(seed);
    if (inserted) {
      space.component_.push_back(space.component_count_++);
      space.parent_.push_back(kNone);
      space.depth_.push_back(0);
      space.grow_from(index, state_budget);
    }
  }
  return space;
}

// States of one component are appended contiguously and expanded in index
// order, so the adjacency rows stay aligned with state indices.
void ColSpace::grow_from(std::size_t seed, std::size_t state_budget) {
  const int n = g_.order();
  const int k = h_.order();
  VertexMap current;
  for (std::size_t s = seed; s < table_.size(); ++s) {
    current = state(s);
    for (Vertex w = 0; w < n; ++w) {
      const Vertex original = current[static_cast<std::size_t>(w)];
      for (Vertex c = 0; c < k; ++c) {
        if (c == original || !is_valid_move(g_, h_, current, w, c)) continue;
        current[static_cast<std::size_t>(w)] = c;
        auto [t, inserted] = table_.insert(current);
        current[static_cast<std::size_t>(w)] = original;
        if (inserted) {
          if (table_.size() > state_budget) {
            throw BudgetExceeded("Col(g, h) exploration exceeded " +
                                 std::to_string(state_budget) + " states");
          }
          component_.push_back(component_[s]);
          parent_.push_back(s);
          depth_.push_back(depth_[s] + 1);
        }
        targets_.push_back(t);
      }
    }
    offsets_.push_back(targets_.size());
  }
}

VertexMap ColSpace::state(std::size_t i) const {
  const auto span = table_[i];
  return VertexMap(span.begin(), span.end());
}

RecoloringPath ColSpace::path(std::size_t i, std::size_t j) const {
  if (!connected(i, j)) {
    throw PreconditionError("states " + std::to_string(i) + " and " + std::to_string(j) +
                            " lie in different components");
  }
  // Climb to the lowest common ancestor in the BFS tree.
  std::vector<std::size_t> up;
  std::vector<std::size_t> down;
  std::size_t a = i;
  std::size_t b = j;
  while (a != b) {
    if (depth_[a] >= depth_[b]) {
      up.push_back(a);
      a = parent_[a];
    } else {
      down.push_back(b);
      b = parent_[b];
    }
  }
  std::vector<std::size_t> sequence = std::move(up);
  sequence.push_back(a);
  sequence.insert(sequence.end(), down.rbegin(), down.rend());

  RecoloringPath out{state(i), {}};
  for (std::size_t s = 0; s + 1 < sequence.size(); ++s) {
    const auto from = table_[sequence[s]];
    const auto to = table_[sequence[s + 1]];
    for (std::size_t v = 0; v < from.size(); ++v) {
      if (from[v] != to[v]) {
        out.steps.push_back({static_cast<Vertex>(v), from[v], to[v]});
        break;
      }
    }
  }
  return out;
}

Graph export_col_graph(const Graph& g, const Graph& h, std::size_t cap) {
  std::size_t candidates = 1;
  for (int i = 0; i < g.order(); ++i) {
    if (h.order() != 0 && candidates > cap / static_cast<std::size_t>(h.order())) {
      throw BudgetExceeded("|V(h)|^|V(g)| exceeds the export cap of " + std::to_string(cap));
    }
    candidates *= static_cast<std::size_t>(h.order());
  }
  if (candidates > cap) {
    throw BudgetExceeded("|V(h)|^|V(g)| exceeds the export cap of " + std::to_string(cap));
  }
  const ColSpace space = ColSpace::full(g, h);
  GraphBuilder builder(static_cast<int>(space.size()), "col-" + g.name() + "-" + h.name());
  for (std::size_t i = 0; i < space.size(); ++i) {
    builder.set_label(static_cast<Vertex>(i), to_string(space.state(i)));
    for (std::size_t t : space.moves(i)) {
      if (i < t) builder.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(t));
    }
  }
  return builder.build();
}

}  // namespace hrecol
