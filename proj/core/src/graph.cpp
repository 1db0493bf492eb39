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

#include "hrecol/graph.hpp"

#include <algorithm>
#include <utility>

#include "hrecol/error.hpp"

namespace hrecol {

namespace {

const std::string kNoLabel;

void check_vertex(Vertex v, int order) {
  if (v < 0 || v >= order) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(order) + ")");
  }
}

}  // namespace

Graph::Graph(std::string name, int order, std::vector<Vertex> loops,
             std::vector<Edge> edges, std::vector<std::string> labels)
    : name_(std::move(name)), order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw PreconditionError("graph order " + std::to_string(order) + " outside [0, " +
                            std::to_string(kMaxOrder) + "]");
  }
  const auto n = static_cast<std::size_t>(order);
  loop_.assign(n, 0);
  adj_.assign(n, {});
  row_words_ = (order + 63) / 64;
  matrix_.assign(n * static_cast<std::size_t>(row_words_) + 1, 0);

  auto set_bit = [&](Vertex a, Vertex b) {
    const auto bit = static_cast<std::size_t>(a) * static_cast<std::size_t>(row_words_) * 64 +
                     static_cast<std::size_t>(b);
    matrix_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  };

  for (Vertex v : loops) {
    check_vertex(v, order);
    if (!loop_[static_cast<std::size_t>(v)]) {
      loop_[static_cast<std::size_t>(v)] = 1;
      ++loop_count_;
      set_bit(v, v);
    }
  }

  for (Edge& e : edges) {
    check_vertex(e.u, order);
    check_vertex(e.v, order);
    if (e.u == e.v) {
      throw PreconditionError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") is a loop; loops belong in the loop set");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    set_bit(e.u, e.v);
    set_bit(e.v, e.u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());

  if (!labels.empty()) {
    if (labels.size() != n) {
      throw PreconditionError("expected " + std::to_string(n) + " labels, got " +
                              std::to_string(labels.size()));
    }
    if (std::any_of(labels.begin(), labels.end(), [](const auto& s) { return !s.empty(); })) {
      labels_ = std::move(labels);
    }
  }
}

std::vector<Vertex> Graph::loops() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(loop_count_));
  for (Vertex v = 0; v < order_; ++v) {
    if (has_loop(v)) out.push_back(v);
  }
  return out;
}

const std::string& Graph::label(Vertex v) const {
  if (labels_.empty()) return kNoLabel;
  return labels_[static_cast<std::size_t>(v)];
}

Graph Graph::renamed(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.name_ == b.name_ && a.order_ == b.order_ && a.loop_ == b.loop_ &&
         a.edges_ == b.edges_ && a.labels_ == b.labels_;
}

GraphBuilder::GraphBuilder(int order, std::string name) : name_(std::move(name)), order_(order) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  edges_.push_back({u, v});
  return *this;
}

GraphBuilder& GraphBuilder::add_loop(Vertex v) {
  loops_.push_back(v);
  return *this;
}

GraphBuilder& GraphBuilder::add_all_loops() {
  for (Vertex v = 0; v < order_; ++v) loops_.push_back(v);
  return *this;
}

GraphBuilder& GraphBuilder::set_label(Vertex v, std::string label) {
  check_vertex(v, order_);
  if (labels_.empty()) labels_.resize(static_cast<std::size_t>(order_));
  labels_[static_cast<std::size_t>(v)] = std::move(label);
  return *this;
}

Graph GraphBuilder::build() const { return Graph(name_, order_, loops_, edges_, labels_); }

Graph complete_graph(int n, bool reflexive) {
  GraphBuilder b(n, (reflexive ? "k" + std::to_string(n) + "-loops" : "k" + std::to_string(n)));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  if (reflexive) b.add_all_loops();
  return b.build();
}

Graph path_graph(int n, bool reflexive) {
  GraphBuilder b(n, (reflexive ? "p" + std::to_string(n) + "-loops" : "p" + std::to_string(n)));
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  if (reflexive) b.add_all_loops();
  return b.build();
}

Graph cycle_graph(int n, bool reflexive) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  GraphBuilder b(n, (reflexive ? "c" + std::to_string(n) + "-loops" : "c" + std::to_string(n)));
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  if (reflexive) b.add_all_loops();
  return b.build();
}

}  // namespace hrecol
