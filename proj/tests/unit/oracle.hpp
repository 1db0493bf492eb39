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

// Brute-force reference implementations used to cross-check the library.
// They read graphs only through edges() and loops() and share no code with
// the implementations under test.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hrecol/graph.hpp"
#include "hrecol/hom.hpp"

namespace oracle {

using hrecol::Graph;
using hrecol::Vertex;
using hrecol::VertexMap;

struct Adjacency {
  explicit Adjacency(const Graph& g) : n(g.order()) {
    for (const auto& e : g.edges()) {
      pairs.insert({e.u, e.v});
      pairs.insert({e.v, e.u});
    }
    for (Vertex v : g.loops()) pairs.insert({v, v});
  }
  bool operator()(Vertex a, Vertex b) const { return pairs.count({a, b}) > 0; }
  int n;
  std::set<std::pair<Vertex, Vertex>> pairs;
};

inline bool is_hom(const Graph& g, const Graph& h, const VertexMap& m) {
  const Adjacency ag(g);
  const Adjacency ah(h);
  for (const auto& [u, v] : ag.pairs) {
    if (!ah(m[static_cast<std::size_t>(u)], m[static_cast<std::size_t>(v)])) return false;
  }
  return true;
}

// Every map V(g) -> V(h), filtered by the homomorphism condition, in
// lexicographic order.
inline std::vector<VertexMap> homs(const Graph& g, const Graph& h) {
  std::vector<VertexMap> out;
  const int n = g.order();
  const int k = h.order();
  if (k == 0) return out;
  VertexMap m(static_cast<std::size_t>(n), 0);
  while (true) {
    if (is_hom(g, h, m)) out.push_back(m);
    int i = n - 1;
    while (i >= 0 && m[static_cast<std::size_t>(i)] == k - 1) m[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++m[static_cast<std::size_t>(i)];
  }
  return out;
}

// Col(g, h) adjacency straight from the definition: a single differing vertex
// w, and a(w) ~ b(w) when w carries a loop.
inline bool col_edge(const Graph& g, const Graph& h, const VertexMap& a, const VertexMap& b) {
  int diff = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      if (diff >= 0) return false;
      diff = static_cast<int>(i);
    }
  }
  if (diff < 0) return false;
  if (!is_hom(g, h, a) || !is_hom(g, h, b)) return false;
  const Adjacency ag(g);
  if (ag(diff, diff) && !Adjacency(h)(a[static_cast<std::size_t>(diff)], b[static_cast<std::size_t>(diff)])) {
    return false;
  }
  return true;
}

// BFS distances in Col(g, h) from `source` over the explicit hom list.
inline std::map<VertexMap, int> distances(const Graph& g, const Graph& h, const VertexMap& source) {
  const auto all = homs(g, h);
  std::map<VertexMap, int> dist{{source, 0}};
  std::deque<VertexMap> queue{source};
  while (!queue.empty()) {
    const VertexMap cur = queue.front();
    queue.pop_front();
    for (const VertexMap& next : all) {
      if (!dist.count(next) && col_edge(g, h, cur, next)) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

// Replays steps, returning the index of the first invalid one.
inline std::optional<std::size_t> first_bad_step(const Graph& g, const Graph& h,
                                                 const hrecol::RecoloringPath& p) {
  VertexMap cur = p.start;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const auto& s = p.steps[i];
    if (cur[static_cast<std::size_t>(s.vertex)] != s.from || s.from == s.to) return i;
    VertexMap next = cur;
    next[static_cast<std::size_t>(s.vertex)] = s.to;
    if (!col_edge(g, h, cur, next)) return i;
    cur = next;
  }
  return std::nullopt;
}

inline bool square_free(const Graph& g) {
  const Adjacency adj(g);
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (std::set<int>{a, b, c, d}.size() != 4) continue;
          if (adj(a, b) && adj(b, c) && adj(c, d) && adj(d, a)) return false;
        }
  return true;
}

inline bool induced_diamond(const Graph& g) {
  const Adjacency adj(g);
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int q[4] = {a, b, c, d};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges += adj(q[i], q[j]) ? 1 : 0;
          if (edges == 5) return true;
        }
  return false;
}

// Maximal cliques by subset enumeration, loops ignored.
inline std::vector<std::vector<Vertex>> cliques(const Graph& g) {
  const Adjacency adj(g);
  const int n = g.order();
  std::vector<std::uint32_t> all;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((s >> i & 1U) && (s >> j & 1U) && !adj(i, j)) ok = false;
    if (ok) all.push_back(s);
  }
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t s : all) {
    bool maximal = true;
    for (std::uint32_t t : all) {
      if (t != s && (t & s) == s) maximal = false;
    }
    if (!maximal) continue;
    std::vector<Vertex> c;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1U) c.push_back(i);
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
