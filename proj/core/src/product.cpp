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

#include "hrecol/product.hpp"

#include <string>

#include "hrecol/error.hpp"

namespace hrecol {

Graph k2() { return GraphBuilder(2, "k2").add_edge(0, 1).build(); }

Graph product_with_k2(const Graph& h) { return tensor_product(h, k2()); }

Bipartition product_sides(const Graph& h) {
  Bipartition sides;
  sides.side.resize(static_cast<std::size_t>(h.order()) * 2);
  for (std::size_t x = 0; x < sides.side.size(); ++x) sides.side[x] = static_cast<int>(x % 2);
  return sides;
}

VertexMap product_lift(const VertexMap& alpha, const Bipartition& sides) {
  VertexMap out(alpha.size());
  for (std::size_t u = 0; u < alpha.size(); ++u) out[u] = product_vertex(alpha[u], sides.side[u]);
  return out;
}

RecoloringPath product_lift(const RecoloringPath& path, const Bipartition& sides) {
  RecoloringPath out{product_lift(path.start, sides), {}};
  for (const auto& step : path.steps) {
    const int s = sides.side[static_cast<std::size_t>(step.vertex)];
    out.steps.push_back({step.vertex, product_vertex(step.from, s), product_vertex(step.to, s)});
  }
  return out;
}

Instance product_lift(const Instance& instance) {
  if (!is_connected(instance.g)) throw PreconditionError("product_lift: g must be connected");
  const auto sides = bipartition(instance.g);
  if (!sides) throw PreconditionError("product_lift: g is not bipartite");
  return {instance.g, product_with_k2(instance.h), product_lift(instance.alpha, *sides),
          product_lift(instance.beta, *sides)};
}

VertexMap product_project(const VertexMap& map) {
  VertexMap out(map);
  for (auto& x : out) x = product_base(x);
  return out;
}

RecoloringPath product_project(const RecoloringPath& path) {
  RecoloringPath out{product_project(path.start), {}};
  for (const auto& step : path.steps) {
    out.steps.push_back({step.vertex, product_base(step.from), product_base(step.to)});
  }
  return out.normalized();
}

RecoloringPath expand_move_reflexive(const Graph& g, const Graph& h, const VertexMap& alpha,
                                     const VertexMap& beta) {
  if (!col_adjacent(g, h, alpha, beta)) {
    throw PreconditionError("expand_move_reflexive: maps are not adjacent in Col(g, h)");
  }
  RecoloringPath out{alpha, {}};
  Vertex w = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (alpha[static_cast<std::size_t>(v)] != beta[static_cast<std::size_t>(v)]) w = v;
  }
  if (w < 0) return out;
  const Vertex a = alpha[static_cast<std::size_t>(w)];
  const Vertex b = beta[static_cast<std::size_t>(w)];
  if (h.adjacent(a, b)) {
    out.steps.push_back({w, a, b});
    return out;
  }
  for (Vertex c = 0; c < h.order(); ++c) {
    if (!h.has_loop(c) || !h.adjacent(c, a) || !h.adjacent(c, b)) continue;
    bool fits = true;
    for (Vertex x : g.neighbors(w)) {
      if (!h.adjacent(c, alpha[static_cast<std::size_t>(x)])) {
        fits = false;
        break;
      }
    }
    if (fits) {
      out.steps.push_back({w, a, c});
      out.steps.push_back({w, c, b});
      return out;
    }
  }
  throw PreconditionError("expand_move_reflexive: no intermediate colour between " +
                          std::to_string(a) + " and " + std::to_string(b) +
                          " (is h reflexive and square-free?)");
}

RecoloringPath unloop_sequence(const RecoloringPath& s, const Graph& g, const Graph& target,
                               const Bipartition& g_sides, const Bipartition& target_sides) {
  const auto n = static_cast<std::size_t>(g.order());
  if (s.start.size() != n || g_sides.side.size() != n ||
      target_sides.side.size() != static_cast<std::size_t>(target.order())) {
    throw PreconditionError("unloop_sequence: size mismatch");
  }
  if (n == 0) return RecoloringPath{s.start, {}};

  // flip == 1 when side 0 of g is meant to map to side 1 of the target.
  const int flip = g_sides.side[0] ^ target_sides.side[static_cast<std::size_t>(s.start[0])];
  auto right = [&](Vertex u, Vertex colour) {
    return (target_sides.side[static_cast<std::size_t>(colour)] ^ flip) ==
           g_sides.side[static_cast<std::size_t>(u)];
  };
  auto aligned = [&](const VertexMap& m) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!right(static_cast<Vertex>(u), m[u])) return false;
    }
    return true;
  };
  if (!aligned(s.start)) throw PreconditionError("unloop_sequence: start map is not side-aligned");
  if (!aligned(s.end())) throw PreconditionError("unloop_sequence: end map is not side-aligned");

  VertexMap along_s = s.start;     // the map as S walks
  VertexMap current = s.start;      // the rewritten walk
  RecoloringPath out{s.start, {}};

  for (const auto& step : s.steps) {
    const Vertex u = step.vertex;
    const Vertex a = along_s[static_cast<std::size_t>(u)];
    const Vertex c = step.to;
    along_s[static_cast<std::size_t>(u)] = c;
    Vertex to;
    if (right(u, c)) {
      to = c;
    } else if (right(u, a)) {
      continue;
    } else {
      Vertex common = -1;
      int count = 0;
      for (Vertex b : target.neighbors(a)) {
        if (b != c && target.adjacent(b, c)) {
          common = b;
          ++count;
        }
      }
      if (count != 1) {
        throw PreconditionError("unloop_sequence: colours " + std::to_string(a) + " and " +
                                std::to_string(c) + " have " + std::to_string(count) +
                                " common neighbours (target must be square-free)");
      }
      to = common;
    }
    out.steps.push_back({u, current[static_cast<std::size_t>(u)], to});
    current[static_cast<std::size_t>(u)] = to;
  }
  return out.normalized();
}

Instance bipartite_irreflexive_to_reflexive(const Instance& instance) {
  Instance lifted = product_lift(instance);
  lifted.h = reflexive_closure(lifted.h);
  return lifted;
}

}  // namespace hrecol
