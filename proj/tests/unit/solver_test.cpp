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

#include <gtest/gtest.h>

#include <utility>

#include "fixtures.hpp"
#include "hrecol/col_space.hpp"
#include "hrecol/error.hpp"
#include "hrecol/graph_algorithms.hpp"
#include "hrecol/harness.hpp"
#include "hrecol/solver.hpp"
#include "oracle.hpp"

namespace hrecol {
namespace {

const Graph kH7 = fixtures::h7();
const Graph kK2L = fixtures::k2_loops();

TEST(Reachable, TrivialWhenEqual) {
  const ReachResult r = reachable({kK2L, kH7, {3, 3}, {3, 3}});
  EXPECT_TRUE(r.reachable);
  ASSERT_TRUE(r.path);
  EXPECT_TRUE(r.path->empty());
}

TEST(Reachable, LoopedEdgeAcrossSevenVertexHost) {
  const Instance inst{kK2L, kH7, {1, 1}, {6, 6}};
  const ReachResult r = reachable(inst);
  ASSERT_TRUE(r.reachable);
  const auto dist = oracle::distances(kK2L, kH7, {1, 1});
  EXPECT_EQ(static_cast<int>(r.path->size()), dist.at({6, 6}));
  EXPECT_EQ(r.path->size(), 6u);
  EXPECT_TRUE(verify_path(kK2L, kH7, *r.path, {6, 6}));
  EXPECT_FALSE(oracle::first_bad_step(kK2L, kH7, *r.path));
  EXPECT_LE(r.states_visited, 25u);
}

TEST(Reachable, SwappedStepsFailAtFirstInvalidStep) {
  const ReachResult r = reachable({kK2L, kH7, {1, 1}, {6, 6}});
  RecoloringPath swapped = *r.path;
  std::swap(swapped.steps[3], swapped.steps[4]);
  const auto expected = oracle::first_bad_step(kK2L, kH7, swapped);
  ASSERT_TRUE(expected);
  const PathCheck check = verify_path(kK2L, kH7, swapped, {6, 6});
  EXPECT_FALSE(check);
  EXPECT_EQ(check.failed_step, expected);
}

TEST(Reachable, FrozenTriangle) {
  const Graph k3 = complete_graph(3);
  const ReachResult r = reachable({k3, k3, {0, 1, 2}, {1, 2, 0}});
  EXPECT_FALSE(r.reachable);
  EXPECT_FALSE(r.path);
  EXPECT_EQ(r.states_visited, 1u);
}

TEST(Reachable, BudgetIsNotAnAnswer) {
  const Graph p = path_graph(8, true);
  const Graph k3 = complete_graph(3, true);
  const Instance inst{p, k3, VertexMap(8, 0), VertexMap(8, 2)};
  EXPECT_THROW(reachable(inst, {100}), BudgetExceeded);
  EXPECT_TRUE(reachable(inst, {10'000}).reachable);
}

TEST(Reachable, RejectsInvalidInstances) {
  EXPECT_THROW(reachable({kK2L, kH7, {1, 3}, {6, 6}}), PreconditionError);
}

// Shortest-path lengths and verdicts against an independent BFS.
TEST(Reachable, AgreesWithBruteForceDistances) {
  const auto gs = generate_graphs({1, 3, {Predicate::connected}}, GenerationMode::exhaustive);
  const auto hs = generate_graphs({2, 3, {Predicate::connected}}, GenerationMode::exhaustive);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < gs.size(); i += 4) {
    for (std::size_t j = 0; j < hs.size(); j += 3) {
      const auto homs = oracle::homs(gs[i], hs[j]);
      if (homs.empty()) continue;
      const auto dist = oracle::distances(gs[i], hs[j], homs.front());
      for (const auto& target : homs) {
        const ReachResult r = reachable({gs[i], hs[j], homs.front(), target});
        const auto it = dist.find(target);
        ASSERT_EQ(r.reachable, it != dist.end());
        if (r.reachable) {
          ASSERT_EQ(static_cast<int>(r.path->size()), it->second);
          ASSERT_TRUE(verify_path(gs[i], hs[j], *r.path, target));
        }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 200u);
}

TEST(ColSpace, ComponentsMatchSolver) {
  const Graph g = path_graph(3);
  const Graph h = cycle_graph(5);
  const ColSpace space = ColSpace::full(g, h);
  EXPECT_EQ(space.size(), oracle::homs(g, h).size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      const bool solver = reachable({g, h, space.state(i), space.state(j)}).reachable;
      ASSERT_EQ(space.connected(i, j), solver);
      if (solver) ASSERT_TRUE(verify_path(g, h, space.path(i, j), space.state(j)));
    }
  }
}

TEST(ColSpace, ExploreOnlyTouchesSeedComponents) {
  const Graph k3 = complete_graph(3);
  const std::vector<VertexMap> seed{{0, 1, 2}};
  const ColSpace space = ColSpace::explore(k3, k3, seed);
  EXPECT_EQ(space.size(), 1u);
  EXPECT_EQ(space.component_count(), 1u);
  EXPECT_THROW(ColSpace::explore(k3, k3, std::vector<VertexMap>{{0, 0, 0}}), PreconditionError);
}

TEST(ColSpace, PathAcrossComponentsThrows) {
  const Graph k2 = complete_graph(2);
  const ColSpace space = ColSpace::full(k2, k2);
  ASSERT_EQ(space.size(), 2u);
  EXPECT_FALSE(space.connected(0, 1));
  EXPECT_THROW(space.path(0, 1), PreconditionError);
}

TEST(ExportColGraph, Examples) {
  const Graph k2 = complete_graph(2);
  const Graph two = export_col_graph(k2, k2);
  EXPECT_EQ(two.order(), 2);
  EXPECT_EQ(two.edge_count(), 0u);
  EXPECT_EQ(two.label(0), "(0,1)");

  const Graph col = export_col_graph(kK2L, kH7);
  EXPECT_EQ(col.order(), 25);
  EXPECT_TRUE(is_connected(col));

  const Graph k1l("k1-loop", 1, {0}, {});
  const Graph single = export_col_graph(k1l, kH7);
  EXPECT_EQ(single.order(), 7);
  EXPECT_EQ(single.edge_count(), kH7.edge_count());
  const auto colour = [&](Vertex v) { return std::stoi(single.label(v).substr(1)); };
  for (const Edge& e : single.edges()) EXPECT_TRUE(kH7.adjacent(colour(e.u), colour(e.v)));

  EXPECT_THROW(export_col_graph(path_graph(9), kH7), BudgetExceeded);
}

TEST(ExportColGraph, ConnectivityMatchesSolver) {
  const Graph g = path_graph(3, true);
  const Graph h = cycle_graph(4);
  const Graph col = export_col_graph(g, h);
  const ColSpace space = ColSpace::full(g, h);
  for (Vertex a = 0; a < col.order(); ++a) {
    for (Vertex b : col.neighbors(a)) {
      EXPECT_TRUE(oracle::col_edge(g, h, space.state(static_cast<std::size_t>(a)),
                                   space.state(static_cast<std::size_t>(b))));
    }
  }
}

}  // namespace
}  // namespace hrecol
