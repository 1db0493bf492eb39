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

#include <random>
#include <string>

#include "hrecol/error.hpp"
#include "hrecol/graph_algorithms.hpp"
#include "hrecol/harness.hpp"

namespace hrecol {

namespace {

constexpr std::pair<Predicate, std::string_view> kPredicateNames[] = {
    {Predicate::reflexive, "reflexive"},     {Predicate::irreflexive, "irreflexive"},
    {Predicate::bipartite, "bipartite"},     {Predicate::square_free, "square-free"},
    {Predicate::diamond_free, "diamond-free"}, {Predicate::connected, "connected"},
    {Predicate::has_edge, "has-edge"},
};

enum class LoopRule { all, none, any };

LoopRule loop_rule(const GraphFamily& family) {
  for (Predicate p : family.predicates) {
    if (p == Predicate::reflexive) return LoopRule::all;
    if (p == Predicate::irreflexive || p == Predicate::bipartite) return LoopRule::none;
  }
  return LoopRule::any;
}

bool accepts(const GraphFamily& family, const Graph& g) {
  for (Predicate p : family.predicates) {
    if (!satisfies(g, p)) return false;
  }
  return true;
}

Graph build(int n, std::uint64_t loop_mask, std::uint64_t edge_mask, std::string name) {
  GraphBuilder b(n, std::move(name));
  for (Vertex v = 0; v < n; ++v) {
    if ((loop_mask >> v) & 1U) b.add_loop(v);
  }
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((edge_mask >> bit) & 1U) b.add_edge(u, v);
    }
  }
  return b.build();
}

}  // namespace

std::string_view to_string(Predicate p) {
  for (const auto& [value, name] : kPredicateNames) {
    if (value == p) return name;
  }
  return "?";
}

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (const auto& [value, text] : kPredicateNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

bool satisfies(const Graph& g, Predicate p) {
  switch (p) {
    case Predicate::reflexive: return is_reflexive(g);
    case Predicate::irreflexive: return is_irreflexive(g);
    case Predicate::bipartite: return bipartition(g).has_value();
    case Predicate::square_free: return is_square_free(g);
    case Predicate::diamond_free: return !has_induced_diamond(g);
    case Predicate::connected: return is_connected(g);
    case Predicate::has_edge: return g.edge_count() > 0;
  }
  return false;
}

void for_each_graph(const GraphFamily& family, GenerationMode mode, std::uint64_t seed,
                    std::size_t count, std::size_t budget,
                    const std::function<void(const Graph&)>& visit) {
  if (family.min_vertices < 0 || family.max_vertices > 10) {
    throw PreconditionError("graph family sizes must lie in 0..10");
  }
  if (family.min_vertices > family.max_vertices) return;
  const LoopRule rule = loop_rule(family);

  if (mode == GenerationMode::exhaustive) {
    std::size_t candidates = 0;
    for (int n = family.min_vertices; n <= family.max_vertices; ++n) {
      const std::size_t loop_sets = rule == LoopRule::any ? (std::size_t{1} << n) : 1;
      candidates += loop_sets << (n * (n - 1) / 2);
    }
    if (candidates > budget) {
      throw BudgetExceeded("exhaustive generation needs " + std::to_string(candidates) +
                           " candidates, budget is " + std::to_string(budget));
    }
    for (int n = family.min_vertices; n <= family.max_vertices; ++n) {
      const std::uint64_t all_loops = (std::uint64_t{1} << n) - 1;
      const std::uint64_t loop_sets = rule == LoopRule::any ? (std::uint64_t{1} << n) : 1;
      const std::uint64_t edge_sets = std::uint64_t{1} << (n * (n - 1) / 2);
      for (std::uint64_t l = 0; l < loop_sets; ++l) {
        const std::uint64_t loop_mask = rule == LoopRule::all ? all_loops : l;
        for (std::uint64_t e = 0; e < edge_sets; ++e) {
          Graph g = build(n, loop_mask, e,
                          "n" + std::to_string(n) + "-l" + std::to_string(loop_mask) + "-e" +
                              std::to_string(e));
          if (accepts(family, g)) visit(g);
        }
      }
    }
    return;
  }

  std::mt19937_64 rng(seed);
  if (count == 0) return;
  std::uniform_int_distribution<int> order(family.min_vertices, family.max_vertices);
  const std::size_t max_attempts = count * 1000 + 1000;
  std::size_t emitted = 0;
  for (std::size_t attempt = 0; attempt < max_attempts && emitted < count; ++attempt) {
    const int n = order(rng);
    const std::uint64_t all_loops = (std::uint64_t{1} << n) - 1;
    std::uint64_t loop_mask = rule == LoopRule::all ? all_loops : 0;
    if (rule == LoopRule::any) loop_mask = rng() & all_loops;
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t edge_mask = pairs == 0 ? 0 : rng() & ((std::uint64_t{1} << pairs) - 1);
    Graph g = build(n, loop_mask, edge_mask, "r" + std::to_string(emitted));
    if (accepts(family, g)) {
      visit(g);
      ++emitted;
    }
  }
  if (emitted < count) {
    throw BudgetExceeded("random generation found only " + std::to_string(emitted) + " of " +
                         std::to_string(count) + " graphs");
  }
}

std::vector<Graph> generate_graphs(const GraphFamily& family, GenerationMode mode,
                                   std::uint64_t seed, std::size_t count, std::size_t budget) {
  std::vector<Graph> out;
  for_each_graph(family, mode, seed, count, budget, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace hrecol
