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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hrecol/graph.hpp"
#include "hrecol/hom.hpp"

// Line-based text formats. '#' starts a comment; blank lines are ignored.
//
//   graph <name>              (optional header)
//   vertices <n>
//   loops <none | all | v1 v2 ...>
//   label <v> <text>          (optional, repeated)
//   edges
//   <u> <v>                   (one per line, u != v)
//   end
//
//   hom <name>                path
//   <u> -> <x>                <vertex> <from> <to>
//   end                       end
//
// An instance file is a graph block for g, one for h, then the homomorphism
// blocks for alpha and beta.
namespace hrecol {

/// Parses exactly one graph block. Duplicate edges are dropped and reported
/// through `warnings` when given. Throws ParseError with the line number.
Graph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string serialize_graph(const Graph& g);

/// Parses one hom block for a source graph with `source_order` vertices.
/// Every source vertex must be assigned exactly once.
VertexMap parse_hom(std::string_view text, int source_order);
std::string serialize_hom(const VertexMap& map, std::string_view name);

std::vector<RecoloringStep> parse_path(std::string_view text);
std::string serialize_path(const std::vector<RecoloringStep>& steps);

/// Parses g, h, alpha, beta. Colour indices are range-checked against h;
/// homomorphism validity is left to the caller.
Instance parse_instance(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string serialize_instance(const Instance& instance);

/// Graphviz rendering; vertex labels become node labels, loops become self-edges.
std::string to_dot(const Graph& g);

// Reads a whole file; throws ParseError naming the file when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace hrecol
