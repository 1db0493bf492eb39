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

#include "hrecol/hom.hpp"

#include "hrecol/error.hpp"
#include "hrecol/graph_algorithms.hpp"

namespace hrecol {

namespace {

bool in_range(const Graph& h, Vertex c) { return c >= 0 && c < h.order(); }

bool map_in_range(const Graph& g, const Graph& h, const VertexMap& map) {
  if (map.size() != static_cast<std::size_t>(g.order())) return false;
  for (Vertex c : map) {
    if (!in_range(h, c)) return false;
  }
  return true;
}

}  // namespace

VertexMap RecoloringPath::end() const {
  VertexMap current = start;
  for (const auto& step : steps) current[static_cast<std::size_t>(step.vertex)] = step.to;
  return current;
}

RecoloringPath RecoloringPath::normalized() const {
  RecoloringPath out{start, {}};
  out.steps.reserve(steps.size());
  for (const auto& step : steps) {
    if (!step.is_noop()) out.steps.push_back(step);
  }
  return out;
}

RecoloringPath RecoloringPath::reversed() const {
  RecoloringPath out{end(), {}};
  out.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    out.steps.push_back({it->vertex, it->to, it->from});
  }
  return out;
}

RecoloringPath& RecoloringPath::append(const RecoloringPath& next) {
  if (next.start != end()) throw PreconditionError("appended path does not start at the end map");
  steps.insert(steps.end(), next.steps.begin(), next.steps.end());
  return *this;
}

void validate_instance(const Instance& instance) {
  if (instance.g.empty() || instance.h.empty()) {
    throw PreconditionError("instance graphs must be non-empty");
  }
  if (!is_connected(instance.g)) throw PreconditionError("instance graph g is disconnected");
  if (!is_homomorphism(instance.g, instance.h, instance.alpha)) {
    throw PreconditionError("alpha is not a homomorphism g -> h");
  }
  if (!is_homomorphism(instance.g, instance.h, instance.beta)) {
    throw PreconditionError("beta is not a homomorphism g -> h");
  }
}

bool is_homomorphism(const Graph& g, const Graph& h, const VertexMap& map) {
  if (!map_in_range(g, h, map)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.has_loop(v) && !h.has_loop(map[static_cast<std::size_t>(v)])) return false;
  }
  for (const Edge& e : g.edges()) {
    if (!h.adjacent(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)])) {
      return false;
    }
  }
  return true;
}

bool is_valid_move(const Graph& g, const Graph& h, const VertexMap& map, Vertex w, Vertex colour) {
  if (!in_range(h, colour)) return false;
  const Vertex current = map[static_cast<std::size_t>(w)];
  if (g.has_loop(w) && !(h.has_loop(colour) && h.adjacent(current, colour))) return false;
  for (Vertex x : g.neighbors(w)) {
    if (!h.adjacent(colour, map[static_cast<std::size_t>(x)])) return false;
  }
  return true;
}

bool col_adjacent(const Graph& g, const Graph& h, const VertexMap& a, const VertexMap& b) {
  if (!is_homomorphism(g, h, a) || !is_homomorphism(g, h, b)) return false;
  std::optional<Vertex> differing;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (a[static_cast<std::size_t>(v)] != b[static_cast<std::size_t>(v)]) {
      if (differing) return false;
      differing = v;
    }
  }
  if (!differing) return true;
  const Vertex w = *differing;
  return !g.has_loop(w) ||
         h.adjacent(a[static_cast<std::size_t>(w)], b[static_cast<std::size_t>(w)]);
}

bool hom_adjacent(const Graph& g, const Graph& h, const VertexMap& a, const VertexMap& b) {
  if (!map_in_range(g, h, a) || !map_in_range(g, h, b)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (g.has_loop(v) && !h.adjacent(a[i], b[i])) return false;
  }
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if (!h.adjacent(a[u], b[v]) || !h.adjacent(a[v], b[u])) return false;
  }
  return true;
}

void for_each_homomorphism(const Graph& g, const Graph& h,
                           const std::function<void(const VertexMap&)>& visit,
                           std::uint64_t budget) {
  const int n = g.order();
  const int k = h.order();
  VertexMap map(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    visit(map);
    return;
  }
  if (k == 0) return;

  // Backward neighbours: those already assigned when v is placed.
  std::vector<std::vector<Vertex>> earlier(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex x : g.neighbors(v)) {
      if (x < v) earlier[static_cast<std::size_t>(v)].push_back(x);
    }
  }
  auto fits = [&](Vertex v, Vertex c) {
    if (g.has_loop(v) && !h.has_loop(c)) return false;
    for (Vertex x : earlier[static_cast<std::size_t>(v)]) {
      if (!h.adjacent(c, map[static_cast<std::size_t>(x)])) return false;
    }
    return true;
  };

  std::uint64_t tried = 0;
  // Iterative depth-first search; map[depth] is the colour under trial.
  int depth = 0;
  map[0] = -1;
  while (depth >= 0) {
    auto& c = map[static_cast<std::size_t>(depth)];
    ++c;
    if (c >= k) {
      --depth;
      continue;
    }
    if (++tried > budget) {
      throw BudgetExceeded("homomorphism enumeration exceeded " + std::to_string(budget) +
                           " candidate assignments");
    }
    if (!fits(depth, c)) continue;
    if (depth == n - 1) {
      visit(map);
    } else {
      ++depth;
      map[static_cast<std::size_t>(depth)] = -1;
    }
  }
}

std::vector<VertexMap> enumerate_homomorphisms(const Graph& g, const Graph& h,
                                               std::uint64_t budget) {
  std::vector<VertexMap> out;
  for_each_homomorphism(g, h, [&](const VertexMap& m) { out.push_back(m); }, budget);
  return out;
}

RecoloringPath hom_edge_to_col_path(const Graph& g, const Graph& h, const VertexMap& a,
                                    const VertexMap& b) {
  if (!is_homomorphism(g, h, a) || !is_homomorphism(g, h, b)) {
    throw PreconditionError("hom_edge_to_col_path: endpoints must be homomorphisms");
  }
  if (!hom_adjacent(g, h, a, b)) {
    throw PreconditionError("hom_edge_to_col_path: maps are not adjacent in Hom(g, h)");
  }
  RecoloringPath path{a, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (a[i] != b[i]) path.steps.push_back({v, a[i], b[i]});
  }
  return path;
}

PathCheck verify_path(const Graph& g, const Graph& h, const RecoloringPath& path,
                      const VertexMap& expected_end) {
  if (!is_homomorphism(g, h, path.start)) {
    return {false, std::nullopt, "start map is not a homomorphism"};
  }
  VertexMap current = path.start;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const auto& step = path.steps[i];
    auto fail = [&](std::string why) { return PathCheck{false, i, std::move(why)}; };
    if (step.vertex < 0 || step.vertex >= g.order()) return fail("vertex out of range");
    const Vertex actual = current[static_cast<std::size_t>(step.vertex)];
    if (step.from != actual) {
      return fail("vertex " + std::to_string(step.vertex) + " has colour " +
                  std::to_string(actual) + ", step claims " + std::to_string(step.from));
    }
    if (step.is_noop()) return fail("no-op step");
    if (!is_valid_move(g, h, current, step.vertex, step.to)) {
      return fail("moving vertex " + std::to_string(step.vertex) + " from " +
                  std::to_string(step.from) + " to " + std::to_string(step.to) +
                  " is not a recolouring move");
    }
    current[static_cast<std::size_t>(step.vertex)] = step.to;
  }
  if (current != expected_end) {
    return {false, std::nullopt, "path ends at " + to_string(current) + ", expected " +
                                     to_string(expected_end)};
  }
  return {};
}

std::string to_string(const VertexMap& map) {
  std::string out = "(";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(map[i]);
  }
  out += ')';
  return out;
}

}  // namespace hrecol
