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

#include "fixtures.hpp"
#include "hrecol/error.hpp"
#include "hrecol/graph_algorithms.hpp"
#include "hrecol/harness.hpp"
#include "hrecol/hom.hpp"
#include "oracle.hpp"

namespace hrecol {
namespace {

const Graph kH7 = fixtures::h7();
const Graph kK2L = fixtures::k2_loops();

TEST(IsHomomorphism, Examples) {
  EXPECT_TRUE(is_homomorphism(kK2L, kH7, {1, 2}));
  EXPECT_FALSE(is_homomorphism(kK2L, kH7, {1, 3}));
  EXPECT_TRUE(is_homomorphism(kH7, kH7, {0, 1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(is_homomorphism(complete_graph(2), complete_graph(2), {0, 0}));
  EXPECT_FALSE(is_homomorphism(kK2L, kH7, {1}));
  EXPECT_FALSE(is_homomorphism(kK2L, kH7, {1, 9}));
}

TEST(EnumerateHomomorphisms, Examples) {
  EXPECT_EQ(enumerate_homomorphisms(complete_graph(2), complete_graph(2)).size(), 2u);
  EXPECT_EQ(enumerate_homomorphisms(kK2L, kH7).size(), 25u);
  EXPECT_TRUE(enumerate_homomorphisms(complete_graph(3), complete_graph(2)).empty());
}

TEST(EnumerateHomomorphisms, AgreesWithBruteForce) {
  GraphFamily small{1, 3, {}};
  const auto gs = generate_graphs(small, GenerationMode::exhaustive);
  const auto hs = generate_graphs(GraphFamily{1, 3, {}}, GenerationMode::exhaustive);
  for (std::size_t i = 0; i < gs.size(); i += 3) {
    for (std::size_t j = 0; j < hs.size(); j += 5) {
      ASSERT_EQ(enumerate_homomorphisms(gs[i], hs[j]), oracle::homs(gs[i], hs[j]))
          << gs[i].name() << " -> " << hs[j].name();
    }
  }
}

TEST(EnumerateHomomorphisms, BudgetIsEnforced) {
  EXPECT_THROW(enumerate_homomorphisms(path_graph(12, true), complete_graph(3, true), 1000),
               BudgetExceeded);
}

TEST(ColAdjacent, Examples) {
  EXPECT_TRUE(col_adjacent(kK2L, kH7, {1, 2}, {0, 2}));
  EXPECT_FALSE(col_adjacent(kK2L, kH7, {1, 2}, {5, 2}));
  EXPECT_TRUE(col_adjacent(kK2L, kH7, {1, 2}, {1, 2}));
  EXPECT_FALSE(col_adjacent(kK2L, kH7, {1, 2}, {0, 0}));
}

TEST(HomAdjacent, Examples) {
  const Graph c6 = cycle_graph(6);
  const Graph k2 = complete_graph(2);
  EXPECT_TRUE(hom_adjacent(k2, c6, {0, 1}, {2, 1}));
  EXPECT_FALSE(hom_adjacent(k2, c6, {0, 1}, {3, 4}));
  EXPECT_TRUE(hom_adjacent(kK2L, kH7, {1, 2}, {1, 2}));
}

TEST(HomAdjacent, ImpliedByColAdjacency) {
  const auto homs = enumerate_homomorphisms(kK2L, kH7);
  for (const auto& a : homs) {
    for (const auto& b : homs) {
      EXPECT_EQ(col_adjacent(kK2L, kH7, a, b), col_adjacent(kK2L, kH7, b, a));
      EXPECT_EQ(hom_adjacent(kK2L, kH7, a, b), hom_adjacent(kK2L, kH7, b, a));
      if (col_adjacent(kK2L, kH7, a, b)) EXPECT_TRUE(hom_adjacent(kK2L, kH7, a, b));
      EXPECT_EQ(col_adjacent(kK2L, kH7, a, b), a == b || oracle::col_edge(kK2L, kH7, a, b));
    }
  }
}

TEST(HomEdgeToColPath, Examples) {
  const Graph c6 = cycle_graph(6);
  const Graph k2 = complete_graph(2);
  EXPECT_TRUE(hom_edge_to_col_path(k2, c6, {0, 1}, {0, 1}).empty());
  const RecoloringPath one = hom_edge_to_col_path(k2, c6, {0, 1}, {2, 1});
  EXPECT_EQ(one.steps, (std::vector<RecoloringStep>{{0, 0, 2}}));
  EXPECT_THROW(hom_edge_to_col_path(k2, c6, {0, 1}, {2, 3}), PreconditionError);
  // Swapping the ends of an edge needs both loops.
  const Graph c6l = cycle_graph(6, true);
  const RecoloringPath two = hom_edge_to_col_path(k2, c6l, {0, 1}, {1, 0});
  EXPECT_EQ(two.size(), 2u);
  EXPECT_TRUE(verify_path(k2, c6l, two, {1, 0}));
}

TEST(HomEdgeToColPath, LengthIsHammingDistance) {
  const Graph g = path_graph(3, true);
  const Graph h = cycle_graph(5, true);
  const auto homs = enumerate_homomorphisms(g, h);
  for (const auto& a : homs) {
    for (const auto& b : homs) {
      if (!hom_adjacent(g, h, a, b)) continue;
      const RecoloringPath p = hom_edge_to_col_path(g, h, a, b);
      std::size_t differ = 0;
      for (std::size_t i = 0; i < a.size(); ++i) differ += a[i] != b[i];
      EXPECT_EQ(p.size(), differ);
      EXPECT_FALSE(oracle::first_bad_step(g, h, p));
      EXPECT_EQ(p.end(), b);
    }
  }
}

TEST(VerifyPath, ReportsFirstBadStep) {
  const RecoloringPath ok{{1, 1}, {{0, 1, 0}, {1, 1, 0}}};
  EXPECT_TRUE(verify_path(kK2L, kH7, ok, {0, 0}));
  const RecoloringPath jump{{1, 1}, {{0, 1, 0}, {1, 1, 5}}};
  const PathCheck bad = verify_path(kK2L, kH7, jump, {0, 5});
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.failed_step, 1u);
  const RecoloringPath noop{{1, 1}, {{0, 1, 1}}};
  EXPECT_EQ(verify_path(kK2L, kH7, noop, {1, 1}).failed_step, 0u);
  const RecoloringPath wrong_from{{1, 1}, {{0, 2, 0}}};
  EXPECT_EQ(verify_path(kK2L, kH7, wrong_from, {0, 1}).failed_step, 0u);
  const PathCheck end = verify_path(kK2L, kH7, ok, {1, 1});
  EXPECT_FALSE(end);
  EXPECT_FALSE(end.failed_step);
  EXPECT_TRUE(verify_path(kK2L, kH7, RecoloringPath{{1, 1}, {}}, {1, 1}));
  EXPECT_FALSE(verify_path(kK2L, kH7, RecoloringPath{{1, 3}, {}}, {1, 3}));
}

TEST(RecoloringPath, NormalizeReverseAppend) {
  RecoloringPath p{{1, 1}, {{0, 1, 0}, {1, 1, 1}, {1, 1, 0}}};
  EXPECT_EQ(p.end(), (VertexMap{0, 0}));
  EXPECT_EQ(p.normalized().size(), 2u);
  const RecoloringPath r = p.normalized().reversed();
  EXPECT_EQ(r.start, (VertexMap{0, 0}));
  EXPECT_EQ(r.steps, (std::vector<RecoloringStep>{{1, 0, 1}, {0, 0, 1}}));
  EXPECT_EQ(r.end(), p.start);
  RecoloringPath joined = p.normalized();
  joined.append(r);
  EXPECT_EQ(joined.size(), 4u);
  EXPECT_EQ(joined.end(), p.start);
  EXPECT_THROW(joined.append(r), PreconditionError);
}

TEST(ValidateInstance, RejectsBadInputs) {
  EXPECT_NO_THROW(validate_instance({kK2L, kH7, {1, 1}, {6, 6}}));
  EXPECT_THROW(validate_instance({kK2L, kH7, {1, 3}, {6, 6}}), PreconditionError);
  EXPECT_THROW(validate_instance({Graph("two", 2, {}, {}), kH7, {1, 1}, {6, 6}}),
               PreconditionError);
  EXPECT_THROW(validate_instance({kK2L, Graph(), {}, {}}), PreconditionError);
}

}  // namespace
}  // namespace hrecol
