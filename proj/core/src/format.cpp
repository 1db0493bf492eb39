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

#include "hrecol/format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hrecol/error.hpp"

namespace hrecol {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Comment-stripped, non-empty lines with their 1-based numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto newline = text.find('\n', pos);
      const auto end = newline == std::string_view::npos ? text.size() : newline;
      ++number;
      auto line = text.substr(pos, end - pos);
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (!line.empty()) lines_.push_back({number, line});
      if (newline == std::string_view::npos) break;
      pos = newline + 1;
    }
  }

  bool done() const { return next_ >= lines_.size(); }

  const Line& peek() const {
    if (done()) throw ParseError("unexpected end of input", last_line());
    return lines_[next_];
  }

  const Line& take() {
    const Line& line = peek();
    ++next_;
    return line;
  }

  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

int parse_int(std::string_view token, std::size_t line) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected an integer, found '" + std::string(token) + "'", line);
  }
  return value;
}

Vertex parse_vertex(std::string_view token, int order, std::size_t line) {
  const int v = parse_int(token, line);
  if (v < 0 || v >= order) {
    throw ParseError("vertex index " + std::to_string(v) + " out of range [0, " +
                         std::to_string(order) + ")",
                     line);
  }
  return v;
}

std::string_view keyword(const Line& line) {
  const auto space = line.text.find_first_of(" \t");
  return line.text.substr(0, space);
}

std::string_view rest(const Line& line) {
  const auto space = line.text.find_first_of(" \t");
  if (space == std::string_view::npos) return {};
  return trim(line.text.substr(space));
}

void expect_keyword(const Line& line, std::string_view word) {
  if (keyword(line) != word) {
    throw ParseError("expected '" + std::string(word) + "', found '" + std::string(line.text) + "'",
                     line.number);
  }
}

Graph read_graph(LineReader& in, std::vector<std::string>* warnings) {
  std::string name;
  if (keyword(in.peek()) == "graph") {
    const Line& line = in.take();
    const auto fields = split(line.text);
    if (fields.size() > 2) throw ParseError("graph name must be a single token", line.number);
    if (fields.size() == 2) name = fields[1];
  }

  const Line& header = in.take();
  expect_keyword(header, "vertices");
  const auto header_fields = split(header.text);
  if (header_fields.size() != 2) throw ParseError("expected 'vertices <n>'", header.number);
  const int order = parse_int(header_fields[1], header.number);
  if (order < 0 || order > Graph::kMaxOrder) {
    throw ParseError("vertex count " + std::to_string(order) + " out of range", header.number);
  }

  std::vector<Vertex> loops;
  std::vector<std::string> labels;
  while (keyword(in.peek()) != "edges") {
    const Line& line = in.take();
    const auto word = keyword(line);
    if (word == "loops") {
      const auto fields = split(line.text);
      if (fields.size() == 2 && fields[1] == "none") continue;
      if (fields.size() == 2 && fields[1] == "all") {
        for (Vertex v = 0; v < order; ++v) loops.push_back(v);
        continue;
      }
      if (fields.size() < 2) throw ParseError("expected 'loops <none | all | indices>'", line.number);
      for (std::size_t i = 1; i < fields.size(); ++i) {
        loops.push_back(parse_vertex(fields[i], order, line.number));
      }
    } else if (word == "label") {
      const auto tail = rest(line);
      const auto space = tail.find_first_of(" \t");
      if (space == std::string_view::npos) throw ParseError("expected 'label <v> <text>'", line.number);
      const Vertex v = parse_vertex(tail.substr(0, space), order, line.number);
      if (labels.empty()) labels.resize(static_cast<std::size_t>(order));
      labels[static_cast<std::size_t>(v)] = std::string(trim(tail.substr(space)));
    } else {
      throw ParseError("unexpected '" + std::string(line.text) + "' in graph header", line.number);
    }
  }
  in.take();  // edges

  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::size_t>> seen;
  while (keyword(in.peek()) != "end") {
    const Line& line = in.take();
    const auto fields = split(line.text);
    if (fields.size() != 2) throw ParseError("expected '<u> <v>'", line.number);
    Vertex u = parse_vertex(fields[0], order, line.number);
    Vertex v = parse_vertex(fields[1], order, line.number);
    if (u == v) {
      throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) +
                           " is a loop; list it on the loops line",
                       line.number);
    }
    if (u > v) std::swap(u, v);
    edges.push_back({u, v});
    seen.push_back({{u, v}, line.number});
  }
  in.take();  // end

  if (warnings) {
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
      if (seen[i].first == seen[i - 1].first) {
        warnings->push_back("line " + std::to_string(seen[i].second) + ": duplicate edge " +
                            std::to_string(seen[i].first.u) + " " +
                            std::to_string(seen[i].first.v) + " ignored");
      }
    }
  }
  return Graph(std::move(name), order, std::move(loops), std::move(edges), std::move(labels));
}

VertexMap read_hom(LineReader& in, int source_order, int target_order) {
  const Line& header = in.take();
  expect_keyword(header, "hom");
  VertexMap map(static_cast<std::size_t>(source_order), -1);
  while (keyword(in.peek()) != "end") {
    const Line& line = in.take();
    const auto fields = split(line.text);
    if (fields.size() != 3 || fields[1] != "->") throw ParseError("expected '<u> -> <x>'", line.number);
    const Vertex u = parse_vertex(fields[0], source_order, line.number);
    const int x = parse_int(fields[2], line.number);
    if (x < 0 || (target_order >= 0 && x >= target_order)) {
      throw ParseError("colour " + std::to_string(x) + " out of range", line.number);
    }
    if (map[static_cast<std::size_t>(u)] != -1) {
      throw ParseError("vertex " + std::to_string(u) + " assigned twice", line.number);
    }
    map[static_cast<std::size_t>(u)] = x;
  }
  const Line& end = in.take();
  for (std::size_t u = 0; u < map.size(); ++u) {
    if (map[u] == -1) {
      throw ParseError("vertex " + std::to_string(u) + " has no image", end.number);
    }
  }
  return map;
}

void expect_done(const LineReader& in) {
  if (!in.done()) throw ParseError("trailing content after block", in.peek().number);
}

}  // namespace

Graph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  LineReader in(text);
  Graph g = read_graph(in, warnings);
  expect_done(in);
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << (g.name().empty() ? "g" : g.name()) << '\n';
  out << "vertices " << g.order() << '\n';
  if (g.loop_count() == 0) {
    out << "loops none\n";
  } else if (g.loop_count() == g.order()) {
    out << "loops all\n";
  } else {
    out << "loops";
    for (Vertex v : g.loops()) out << ' ' << v;
    out << '\n';
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!g.label(v).empty()) out << "label " << v << ' ' << g.label(v) << '\n';
  }
  out << "edges\n";
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  out << "end\n";
  return out.str();
}

VertexMap parse_hom(std::string_view text, int source_order) {
  LineReader in(text);
  VertexMap map = read_hom(in, source_order, -1);
  expect_done(in);
  return map;
}

std::string serialize_hom(const VertexMap& map, std::string_view name) {
  std::ostringstream out;
  out << "hom " << name << '\n';
  for (std::size_t u = 0; u < map.size(); ++u) out << u << " -> " << map[u] << '\n';
  out << "end\n";
  return out.str();
}

std::vector<RecoloringStep> parse_path(std::string_view text) {
  LineReader in(text);
  const Line& header = in.take();
  expect_keyword(header, "path");
  std::vector<RecoloringStep> steps;
  while (keyword(in.peek()) != "end") {
    const Line& line = in.take();
    const auto fields = split(line.text);
    if (fields.size() != 3) throw ParseError("expected '<vertex> <from> <to>'", line.number);
    steps.push_back({parse_int(fields[0], line.number), parse_int(fields[1], line.number),
                     parse_int(fields[2], line.number)});
  }
  in.take();
  expect_done(in);
  return steps;
}

std::string serialize_path(const std::vector<RecoloringStep>& steps) {
  std::ostringstream out;
  out << "path\n";
  for (const auto& s : steps) out << s.vertex << ' ' << s.from << ' ' << s.to << '\n';
  out << "end\n";
  return out.str();
}

Instance parse_instance(std::string_view text, std::vector<std::string>* warnings) {
  LineReader in(text);
  Instance instance;
  instance.g = read_graph(in, warnings);
  instance.h = read_graph(in, warnings);
  instance.alpha = read_hom(in, instance.g.order(), instance.h.order());
  instance.beta = read_hom(in, instance.g.order(), instance.h.order());
  expect_done(in);
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  return serialize_graph(instance.g) + serialize_graph(instance.h) +
         serialize_hom(instance.alpha, "alpha") + serialize_hom(instance.beta, "beta");
}

std::string to_dot(const Graph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph " << quote(g.name().empty() ? "g" : g.name()) << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (!g.label(v).empty()) out << " [label=" << quote(g.label(v)) << "]";
    out << ";\n";
  }
  for (Vertex v : g.loops()) out << "  " << v << " -- " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace hrecol
