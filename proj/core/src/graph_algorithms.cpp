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

#include "hrecol/graph_algorithms.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace hrecol {

bool is_reflexive(const Graph& g) { return g.loop_count() == g.order(); }

bool is_irreflexive(const Graph& g) { return g.loop_count() == 0; }

bool is_connected(const Graph& g) {
  if (g.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

bool is_square_free(const Graph& g) {
  // A square exists iff two distinct vertices share two common neighbours.
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      int common = 0;
      for (Vertex b : g.neighbors(a)) {
        if (b != c && g.adjacent(b, c) && ++common >= 2) return false;
      }
    }
  }
  return true;
}

std::optional<std::array<Vertex, 4>> find_induced_diamond(const Graph& g) {
  for (const Edge& e : g.edges()) {
    std::vector<Vertex> common;
    for (Vertex x : g.neighbors(e.u)) {
      if (x != e.v && g.adjacent(x, e.v)) common.push_back(x);
    }
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        if (!g.adjacent(common[i], common[j])) {
          return std::array<Vertex, 4>{e.u, e.v, common[i], common[j]};
        }
      }
    }
  }
  return std::nullopt;
}

bool has_induced_diamond(const Graph& g) { return find_induced_diamond(g).has_value(); }

std::optional<Bipartition> bipartition(const Graph& g) {
  if (g.loop_count() > 0) return std::nullopt;
  Bipartition result;
  result.side.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (result.side[static_cast<std::size_t>(root)] != -1) continue;
    result.side[static_cast<std::size_t>(root)] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      const int s = result.side[static_cast<std::size_t>(v)];
      for (Vertex w : g.neighbors(v)) {
        int& t = result.side[static_cast<std::size_t>(w)];
        if (t == -1) {
          t = 1 - s;
          queue.push(w);
        } else if (t == s) {
          return std::nullopt;
        }
      }
    }
  }
  return result;
}

Graph tensor_product(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int nb = b.order();
  auto index = [nb](Vertex i, Vertex j) { return i * nb + j; };

  GraphBuilder builder(na * nb, a.name() + "x" + b.name());
  for (Vertex i = 0; i < na; ++i) {
    for (Vertex j = 0; j < nb; ++j) {
      if (a.has_loop(i) && b.has_loop(j)) builder.add_loop(index(i, j));
    }
  }
  // (i, j) ~ (i2, j2) iff i ~ i2 and j ~ j2; enumerate closed neighbourhoods.
  auto closed = [](const Graph& g, Vertex v) {
    std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
    if (g.has_loop(v)) out.push_back(v);
    return out;
  };
  for (Vertex i = 0; i < na; ++i) {
    const auto ni = closed(a, i);
    for (Vertex j = 0; j < nb; ++j) {
      const auto nj = closed(b, j);
      for (Vertex i2 : ni) {
        for (Vertex j2 : nj) {
          const Vertex x = index(i, j);
          const Vertex y = index(i2, j2);
          if (x < y) builder.add_edge(x, y);
        }
      }
    }
  }
  return builder.build();
}

Graph reflexive_closure(const Graph& g) {
  std::vector<Vertex> loops(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) loops[static_cast<std::size_t>(v)] = v;
  return Graph(g.name(), g.order(), std::move(loops), g.edges(), g.labels());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    position[static_cast<std::size_t>(keep[k])] = static_cast<Vertex>(k);
  }
  GraphBuilder builder(static_cast<int>(keep.size()), g.name());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const Vertex v = keep[k];
    const auto& original = g.label(v);
    builder.set_label(static_cast<Vertex>(k), original.empty() ? std::to_string(v) : original);
    if (g.has_loop(v)) builder.add_loop(static_cast<Vertex>(k));
  }
  for (const Edge& e : g.edges()) {
    const Vertex pu = position[static_cast<std::size_t>(e.u)];
    const Vertex pv = position[static_cast<std::size_t>(e.v)];
    if (pu >= 0 && pv >= 0) builder.add_edge(pu, pv);
  }
  return builder.build();
}

namespace {

// Bron-Kerbosch with Tomita pivoting over sorted vertex vectors.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  std::vector<std::vector<Vertex>> run() {
    std::vector<Vertex> r;
    std::vector<Vertex> p(static_cast<std::size_t>(g_.order()));
    for (Vertex v = 0; v < g_.order(); ++v) p[static_cast<std::size_t>(v)] = v;
    expand(r, p, {});
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  std::vector<Vertex> filter(const std::vector<Vertex>& set, Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : set) {
      if (w != v && g_.adjacent(v, w)) out.push_back(w);
    }
    return out;
  }

  void expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty()) {
      if (x.empty()) {
        auto clique = r;
        std::sort(clique.begin(), clique.end());
        out_.push_back(std::move(clique));
      }
      return;
    }
    Vertex pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
      for (Vertex u : *set) {
        const std::size_t count = filter(p, u).size();
        if (pivot == -1 || count > best) {
          pivot = u;
          best = count;
        }
      }
    }
    std::vector<Vertex> candidates;
    for (Vertex v : p) {
      if (v == pivot || !g_.adjacent(pivot, v)) candidates.push_back(v);
    }
    for (Vertex v : candidates) {
      r.push_back(v);
      expand(r, filter(p, v), filter(x, v));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const Graph& g_;
  std::vector<std::vector<Vertex>> out_;
};

}  // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) { return CliqueSearch(g).run(); }

}  // namespace hrecol
