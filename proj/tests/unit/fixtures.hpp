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

namespace fixtures {

// The reflexive seven-vertex host with cliques {0,1,2}, {0,3,4}, {2,5}, {3,6}, {5,6}.
inline hrecol::Graph h7() {
  hrecol::GraphBuilder b(7, "h7");
  b.add_all_loops();
  const int edges[][2] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {2, 5}, {5, 6}, {3, 6}};
  for (const auto& e : edges) b.add_edge(e[0], e[1]);
  return b.build();
}

inline hrecol::Graph k2_loops() { return hrecol::complete_graph(2, true); }

inline hrecol::Graph diamond(bool reflexive = false) {
  hrecol::GraphBuilder b(4, "diamond");
  if (reflexive) b.add_all_loops();
  b.add_edge(0, 1).add_edge(0, 2).add_edge(1, 2).add_edge(0, 3).add_edge(1, 3);
  return b.build();
}

}  // namespace fixtures
