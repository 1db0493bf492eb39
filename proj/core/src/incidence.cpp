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

#include "hrecol/incidence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hrecol/error.hpp"
#include "hrecol/graph_algorithms.hpp"

namespace hrecol {

namespace {

std::string set_text(const std::vector<Vertex>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members[i]);
  }
  return out + "}";
}

}  // namespace

Vertex CliqueIncidence::false_clique(Vertex a) const {
  if (!with_false_) throw PreconditionError("incidence graph has no false cliques");
  return host_order() + clique_count() + a;
}

std::vector<Vertex> CliqueIncidence::members(Vertex clique_vertex) const {
  if (is_false_clique(clique_vertex)) return {clique_vertex - host_order() - clique_count()};
  if (clique_vertex < host_order() || clique_vertex >= host_order() + clique_count()) {
    throw PreconditionError("vertex " + std::to_string(clique_vertex) + " is not a clique vertex");
  }
  return cliques_[static_cast<std::size_t>(clique_vertex - host_order())];
}

Vertex CliqueIncidence::clique_of(Vertex a, Vertex b) const {
  if (a == b) return false_clique(a);
  const Vertex k = edge_clique_[static_cast<std::size_t>(a) * static_cast<std::size_t>(host_order()) +
                                static_cast<std::size_t>(b)];
  if (k < 0) {
    throw PreconditionError("host vertices " + std::to_string(a) + " and " + std::to_string(b) +
                            " are not adjacent");
  }
  return k;
}

Vertex CliqueIncidence::retract(Vertex x) const {
  if (!is_false_clique(x)) return x;
  return least_clique_[static_cast<std::size_t>(x - host_order() - clique_count())];
}

CliqueIncidence build_clique_incidence(const Graph& h, bool with_false_cliques) {
  if (!is_reflexive(h)) throw PreconditionError("clique incidence needs a reflexive host graph");
  if (const auto d = find_induced_diamond(h)) {
    const auto& w = *d;
    throw DiamondError("host graph has an induced diamond on {" + std::to_string(w[0]) + "," +
                           std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
                           std::to_string(w[3]) + "}",
                       w);
  }

  CliqueIncidence ci;
  ci.host_ = h;
  ci.with_false_ = with_false_cliques;
  ci.cliques_ = maximal_cliques(h);

  const int n = h.order();
  const int m = static_cast<int>(ci.cliques_.size());
  const int total = n + m + (with_false_cliques ? n : 0);
  GraphBuilder builder(total, (with_false_cliques ? "bprime-" : "b-") + h.name());

  for (Vertex a = 0; a < n; ++a) {
    builder.set_label(a, h.label(a).empty() ? std::to_string(a) : h.label(a));
  }
  ci.edge_clique_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  ci.least_clique_.assign(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < m; ++k) {
    const Vertex kv = n + k;
    const auto& members = ci.cliques_[static_cast<std::size_t>(k)];
    builder.set_label(kv, "clique " + set_text(members));
    for (Vertex a : members) {
      builder.add_edge(a, kv);
      auto& least = ci.least_clique_[static_cast<std::size_t>(a)];
      if (least < 0) least = kv;
      for (Vertex b : members) {
        if (a == b) continue;
        auto& slot = ci.edge_clique_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                                     static_cast<std::size_t>(b)];
        if (slot >= 0) throw std::logic_error("edge in two maximal cliques of a diamond-free graph");
        slot = kv;
      }
    }
  }
  if (with_false_cliques) {
    for (Vertex a = 0; a < n; ++a) {
      builder.set_label(n + m + a, "false {" + std::to_string(a) + "}");
      builder.add_edge(a, n + m + a);
    }
  }
  ci.incidence_ = builder.build();
  return ci;
}

Vertex EdgeIncidence::edge_vertex(Vertex u, Vertex v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  const auto& edges = source_.edges();
  const auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) {
    throw PreconditionError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  return source_order() + static_cast<Vertex>(it - edges.begin());
}

EdgeIncidence build_edge_incidence(const Graph& g) {
  if (!is_reflexive(g)) throw PreconditionError("edge incidence needs a reflexive graph");
  EdgeIncidence ei;
  ei.source_ = g;
  const int n = g.order();
  const auto& edges = g.edges();
  GraphBuilder builder(n + static_cast<int>(edges.size()), "e-" + g.name());
  for (Vertex v = 0; v < n; ++v) {
    builder.set_label(v, g.label(v).empty() ? std::to_string(v) : g.label(v));
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Vertex x = n + static_cast<Vertex>(k);
    builder.set_label(x, "edge (" + std::to_string(edges[k].u) + "," + std::to_string(edges[k].v) + ")");
    builder.add_edge(edges[k].u, x);
    builder.add_edge(edges[k].v, x);
  }
  ei.incidence_ = builder.build();
  return ei;
}

VertexMap lift_hom(const VertexMap& alpha, const EdgeIncidence& ei, const CliqueIncidence& ci) {
  if (!ci.has_false_cliques()) throw PreconditionError("lift_hom needs false cliques");
  if (!is_homomorphism(ei.source(), ci.host(), alpha)) {
    throw PreconditionError("lift_hom: " + to_string(alpha) + " is not a homomorphism g -> h");
  }
  VertexMap lifted(alpha);
  lifted.reserve(static_cast<std::size_t>(ei.incidence().order()));
  for (const Edge& e : ei.source().edges()) {
    lifted.push_back(
        ci.clique_of(alpha[static_cast<std::size_t>(e.u)], alpha[static_cast<std::size_t>(e.v)]));
  }
  return lifted;
}

VertexMap restrict_hom(const VertexMap& sigma, const EdgeIncidence& ei, const CliqueIncidence& ci) {
  if (sigma.size() != static_cast<std::size_t>(ei.incidence().order())) {
    throw PreconditionError("restrict_hom: map has the wrong size");
  }
  VertexMap out(sigma.begin(), sigma.begin() + ei.source_order());
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (!ci.is_host_vertex(out[v])) {
      throw PreconditionError("restrict_hom: vertex " + std::to_string(v) +
                              " is mapped to clique vertex " + std::to_string(out[v]));
    }
  }
  if (!is_homomorphism(ei.source(), ci.host(), out)) {
    throw PreconditionError("restrict_hom: restriction is not a homomorphism");
  }
  return out;
}

RecoloringPath expand_move(const VertexMap& alpha, const RecoloringStep& step,
                           const EdgeIncidence& ei, const CliqueIncidence& ci) {
  const Graph& g = ei.source();
  const Graph& h = ci.host();
  const Vertex u = step.vertex;
  if (u < 0 || u >= g.order() || alpha[static_cast<std::size_t>(u)] != step.from) {
    throw PreconditionError("expand_move: step does not start from alpha");
  }
  if (step.is_noop()) return RecoloringPath{lift_hom(alpha, ei, ci), {}};
  if (!is_homomorphism(g, h, alpha) || !is_valid_move(g, h, alpha, u, step.to)) {
    throw PreconditionError("expand_move: step is not a move of Col(g, h)");
  }

  const Graph& e_graph = ei.incidence();
  const Graph& b_graph = ci.incidence();
  RecoloringPath out{lift_hom(alpha, ei, ci), {}};
  VertexMap current = out.start;
  auto emit = [&](Vertex x, Vertex to) {
    const Vertex from = current[static_cast<std::size_t>(x)];
    if (from == to) return;
    if (!is_valid_move(e_graph, b_graph, current, x, to)) {
      throw std::logic_error("expand_move: derived move " + std::to_string(x) + ": " +
                             std::to_string(from) + " -> " + std::to_string(to) + " is invalid");
    }
    out.steps.push_back({x, from, to});
    current[static_cast<std::size_t>(x)] = to;
  };

  std::vector<std::pair<Vertex, Vertex>> deferred;  // (edge-vertex, target clique)
  for (Vertex v : g.neighbors(u)) {
    const Vertex x = ei.edge_vertex(u, v);
    const Vertex target = ci.clique_of(step.to, alpha[static_cast<std::size_t>(v)]);
    if (ci.contains(target, step.from)) {
      emit(x, target);
    } else {
      deferred.emplace_back(x, target);
    }
  }
  emit(u, step.to);
  for (const auto& [x, target] : deferred) emit(x, target);
  return out;
}

RecoloringPath transfer_path_forward(const RecoloringPath& path, const EdgeIncidence& ei,
                                     const CliqueIncidence& ci) {
  RecoloringPath out{lift_hom(path.start, ei, ci), {}};
  VertexMap current = path.start;
  for (const auto& step : path.steps) {
    const auto piece = expand_move(current, step, ei, ci);
    out.steps.insert(out.steps.end(), piece.steps.begin(), piece.steps.end());
    current[static_cast<std::size_t>(step.vertex)] = step.to;
  }
  return out;
}

RecoloringPath transfer_path_backward(const RecoloringPath& path, const EdgeIncidence& ei,
                                      const CliqueIncidence& ci) {
  RecoloringPath out{restrict_hom(path.start, ei, ci), {}};
  for (const auto& step : path.steps) {
    if (ei.is_edge_vertex(step.vertex)) continue;
    if (!ci.is_host_vertex(step.to)) {
      throw PreconditionError("transfer_path_backward: vertex " + std::to_string(step.vertex) +
                              " leaves V(h)");
    }
    out.steps.push_back(step);
  }
  return out.normalized();
}

VertexMap retract_false_cliques(const VertexMap& sigma, const CliqueIncidence& ci) {
  VertexMap out(sigma);
  for (auto& x : out) x = ci.retract(x);
  return out;
}

RecoloringPath retract_false_cliques(const RecoloringPath& path, const CliqueIncidence& ci) {
  RecoloringPath out{retract_false_cliques(path.start, ci), {}};
  for (const auto& step : path.steps) {
    out.steps.push_back({step.vertex, ci.retract(step.from), ci.retract(step.to)});
  }
  return out.normalized();
}

}  // namespace hrecol
