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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hrecol {

using Vertex = int;

// An unordered pair of distinct vertices, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite undirected graph on vertices 0..order()-1 with optional loops.
///
/// Loops are kept apart from the edge list: `edges()` never contains a pair
/// (v, v), and `adjacent(v, v)` holds exactly when v carries a loop. Values
/// are immutable once constructed.
class Graph {
 public:
  // Largest order accepted; the adjacency matrix is dense.
  static constexpr int kMaxOrder = 16384;

  Graph() = default;

  /// Builds a graph, normalising edge orientation and dropping duplicates.
  /// Throws PreconditionError on out-of-range vertices or a pair (v, v).
  Graph(std::string name, int order, std::vector<Vertex> loops,
        std::vector<Edge> edges, std::vector<std::string> labels = {});

  const std::string& name() const noexcept { return name_; }
  int order() const noexcept { return order_; }
  bool empty() const noexcept { return order_ == 0; }

  bool has_loop(Vertex v) const { return loop_[static_cast<std::size_t>(v)] != 0; }
  int loop_count() const noexcept { return loop_count_; }
  std::vector<Vertex> loops() const;

  // Closed adjacency: a == b is adjacent iff a carries a loop.
  bool adjacent(Vertex a, Vertex b) const {
    const auto bit = static_cast<std::size_t>(a) * static_cast<std::size_t>(row_words_) * 64 +
                     static_cast<std::size_t>(b);
    return (matrix_[bit >> 6] >> (bit & 63)) & 1U;
  }

  // Distinct neighbours in ascending order; never contains v itself.
  std::span<const Vertex> neighbors(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  // Empty string when the vertex carries no label.
  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Graph renamed(std::string name) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::string name_;
  int order_ = 0;
  int loop_count_ = 0;
  int row_words_ = 0;
  std::vector<char> loop_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> matrix_;
  std::vector<std::string> labels_;
};

/// Incremental construction of a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order, std::string name = {});

  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& add_loop(Vertex v);
  GraphBuilder& add_all_loops();
  GraphBuilder& set_label(Vertex v, std::string label);

  Graph build() const;

 private:
  std::string name_;
  int order_;
  std::vector<Vertex> loops_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// Small named families used throughout tests, benchmarks and the CLI.
Graph complete_graph(int n, bool reflexive = false);
Graph path_graph(int n, bool reflexive = false);
Graph cycle_graph(int n, bool reflexive = false);

}  // namespace hrecol
