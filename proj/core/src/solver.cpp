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

#include "hrecol/solver.hpp"

#include <string>
#include <vector>

#include "hrecol/detail/state_table.hpp"
#include "hrecol/error.hpp"

namespace hrecol {

ReachResult reachable(const Instance& instance, const SolverOptions& options) {
  validate_instance(instance);
  const Graph& g = instance.g;
  const Graph& h = instance.h;
  if (instance.alpha == instance.beta) return {true, RecoloringPath{instance.alpha, {}}, 1};

  detail::StateTable table(static_cast<std::size_t>(g.order()));
  // Predecessor state and the vertex recoloured to reach each state.
  std::vector<std::size_t> parent;
  std::vector<Vertex> moved;
  table.insert(instance.alpha);
  parent.push_back(0);
  moved.push_back(-1);

  auto reconstruct = [&](std::size_t target) {
    std::vector<RecoloringStep> reversed;
    for (std::size_t s = target; s != 0; s = parent[s]) {
      const Vertex v = moved[s];
      reversed.push_back({v, table[parent[s]][static_cast<std::size_t>(v)],
                          table[s][static_cast<std::size_t>(v)]});
    }
    return RecoloringPath{instance.alpha, {reversed.rbegin(), reversed.rend()}};
  };

  VertexMap current;
  for (std::size_t s = 0; s < table.size(); ++s) {
    const auto row = table[s];
    current.assign(row.begin(), row.end());
    for (Vertex w = 0; w < g.order(); ++w) {
      const Vertex original = current[static_cast<std::size_t>(w)];
      for (Vertex c = 0; c < h.order(); ++c) {
        if (c == original || !is_valid_move(g, h, current, w, c)) continue;
        current[static_cast<std::size_t>(w)] = c;
        auto [t, inserted] = table.insert(current);
        if (inserted) {
          if (table.size() > options.state_budget) {
            throw BudgetExceeded("search visited more than " +
                                 std::to_string(options.state_budget) + " states");
          }
          parent.push_back(s);
          moved.push_back(w);
          if (current == instance.beta) return {true, reconstruct(t), table.size()};
        }
        current[static_cast<std::size_t>(w)] = original;
      }
    }
  }
  return {false, std::nullopt, table.size()};
}

}  // namespace hrecol
