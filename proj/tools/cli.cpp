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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hrecol/col_space.hpp"
#include "hrecol/error.hpp"
#include "hrecol/format.hpp"
#include "hrecol/graph_algorithms.hpp"
#include "hrecol/harness.hpp"
#include "hrecol/incidence.hpp"
#include "hrecol/product.hpp"
#include "hrecol/solver.hpp"
#include "hrecol/structure.hpp"

namespace hrecol::cli {

namespace {

// Names the file in parse errors.
class FileError : public Error {
 public:
  using Error::Error;
};

template <typename Parse>
auto load(const std::string& path, Parse parse, std::ostream& err) {
  const std::string text = read_file(path);
  std::vector<std::string> warnings;
  try {
    auto value = parse(text, &warnings);
    for (const std::string& w : warnings) err << "warning: " << path << ": " << w << '\n';
    return value;
  } catch (const ParseError& e) {
    throw FileError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path, std::ostream& err) {
  return load(path, [](std::string_view t, auto* w) { return parse_graph(t, w); }, err);
}

Instance load_instance(const std::string& path, std::ostream& err) {
  return load(path, [](std::string_view t, auto* w) { return parse_instance(t, w); }, err);
}

std::vector<RecoloringStep> load_path(const std::string& path, std::ostream& err) {
  return load(path, [](std::string_view t, auto*) { return parse_path(t); }, err);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FileError(path + ": cannot write file");
  f << text;
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string clique_text(const std::vector<Vertex>& clique) {
  std::string s = "{";
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(clique[i]);
  }
  return s + "}";
}

int cmd_props(const std::string& file, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(file, err);
  out << "graph " << (g.name().empty() ? "-" : g.name()) << '\n'
      << "vertices " << g.order() << '\n'
      << "edges " << g.edge_count() << '\n'
      << "loops " << g.loop_count() << '\n'
      << "connected " << yes_no(is_connected(g)) << '\n'
      << "reflexive " << yes_no(is_reflexive(g)) << '\n'
      << "irreflexive " << yes_no(is_irreflexive(g)) << '\n'
      << "bipartite " << yes_no(bipartition(g).has_value()) << '\n'
      << "square-free " << yes_no(is_square_free(g)) << '\n';
  const auto diamond = find_induced_diamond(g);
  out << "induced-diamond-free " << yes_no(!diamond) << '\n';
  if (diamond) {
    out << "diamond " << (*diamond)[0] << ' ' << (*diamond)[1] << ' ' << (*diamond)[2] << ' '
        << (*diamond)[3] << '\n';
  }
  out << "stiff " << yes_no(is_stiff(g)) << '\n' << "max-cliques";
  for (const auto& c : maximal_cliques(g)) out << ' ' << clique_text(c);
  out << '\n';
  return kOk;
}

struct SolveArgs {
  std::string file;
  std::string via;
  std::string out_path;
  std::size_t budget = 1'000'000;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(a.file, err);
  validate_instance(inst);
  const SolverOptions opts{a.budget};

  std::optional<RecoloringPath> path;
  std::size_t states = 0;
  if (a.via.empty()) {
    const ReachResult r = reachable(inst, opts);
    states = r.states_visited;
    path = r.path;
  } else {
    if (!is_reflexive(inst.g) || !is_reflexive(inst.h)) {
      throw PreconditionError("--via clique-incidence needs reflexive g and h");
    }
    const EdgeIncidence ei = build_edge_incidence(inst.g);
    const CliqueIncidence ci = build_clique_incidence(inst.h, true);
    const Instance reduced{ei.incidence(), ci.incidence(), lift_hom(inst.alpha, ei, ci),
                           lift_hom(inst.beta, ei, ci)};
    const ReachResult r = reachable(reduced, opts);
    states = r.states_visited;
    if (r.path) {
      out << "reduced-length " << r.path->size() << '\n';
      path = transfer_path_backward(*r.path, ei, ci);
      const PathCheck check = verify_path(inst.g, inst.h, *path, inst.beta);
      if (!check) throw std::logic_error("transferred path failed verification: " + check.reason);
    }
  }

  out << "states " << states << '\n';
  if (!path) {
    out << "UNREACHABLE\n";
    return kNo;
  }
  out << "REACHABLE\n" << "length " << path->size() << '\n';
  emit(a.out_path, serialize_path(path->steps), out);
  return kOk;
}

int cmd_verify(const std::string& instance_file, const std::string& path_file, std::ostream& out,
               std::ostream& err) {
  const Instance inst = load_instance(instance_file, err);
  const RecoloringPath path{inst.alpha, load_path(path_file, err)};
  const PathCheck check = verify_path(inst.g, inst.h, path, inst.beta);
  if (check) {
    out << "VALID " << path.size() << " steps\n";
    return kOk;
  }
  out << "INVALID";
  if (check.failed_step) out << " step " << *check.failed_step;
  out << ": " << check.reason << '\n';
  return kNo;
}

struct ReduceArgs {
  std::string file;
  std::string method;
  std::string out_path;
  std::string map_path;
};

std::string vertex_map_text(const Graph& g) {
  std::ostringstream os;
  for (Vertex v = 0; v < g.order(); ++v) os << v << ' ' << g.label(v) << '\n';
  return os.str();
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(a.file, err);
  validate_instance(inst);
  Instance reduced;
  if (a.method == "clique-incidence") {
    const EdgeIncidence ei = build_edge_incidence(inst.g);
    const CliqueIncidence ci = build_clique_incidence(inst.h, true);
    reduced = Instance{ei.incidence(), ci.incidence(), lift_hom(inst.alpha, ei, ci),
                       lift_hom(inst.beta, ei, ci)};
    if (!a.map_path.empty()) {
      write_file(a.map_path, "source\n" + vertex_map_text(reduced.g) + "target\n" +
                                 vertex_map_text(reduced.h));
    }
  } else if (a.method == "reflexive-closure") {
    if (!is_irreflexive(inst.g) || !is_reflexive(inst.h) || !is_square_free(inst.h)) {
      throw PreconditionError(
          "reflexive-closure needs irreflexive g and reflexive square-free h");
    }
    reduced = Instance{reflexive_closure(inst.g), inst.h, inst.alpha, inst.beta};
  } else if (a.method == "bipartite-to-reflexive") {
    reduced = bipartite_irreflexive_to_reflexive(inst);
  } else if (a.method == "product-k2") {
    reduced = product_lift(inst);
  } else {
    throw PreconditionError("unknown reduction method " + a.method);
  }
  emit(a.out_path, serialize_instance(reduced), out);
  return kOk;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad vertex in --keep: " + item);
    }
  }
  return out;
}

int cmd_dismantle(const std::string& file, const std::string& keep, std::ostream& out,
                  std::ostream& err) {
  const Graph g = load_graph(file, err);
  const DismantlingSequence seq =
      keep.empty() ? dismantle(g) : dismantle_onto(g, parse_vertex_list(keep));
  for (const Fold& f : seq.folds) out << "fold " << f.folded << " -> " << f.into << '\n';
  out << "remaining";
  for (Vertex v : seq.remaining) out << ' ' << v;
  out << '\n' << "stiff " << yes_no(is_stiff(seq.residual)) << '\n'
      << serialize_graph(seq.residual);
  return kOk;
}

struct CompareArgs {
  std::string campaign;
  int max_g = 3;
  int max_h = 3;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  unsigned threads = 1;
  std::string out_dir;
  std::string replay;
  std::size_t budget = 1'000'000;
};

int replay_mismatch(CampaignKind kind, const std::string& prefix, std::ostream& out,
                    std::ostream& err) {
  const Instance pair = load_instance(prefix + ".instance", err);
  const Graph h = load_graph(prefix + ".h.graph", err);
  CheckOptions opts;
  opts.only_pair.emplace(pair.alpha, pair.beta);
  const InstanceOutcome o = check_instance(kind, pair.g, h, opts);
  switch (o.status) {
    case InstanceOutcome::Status::agree: out << "agree\n"; return kOk;
    case InstanceOutcome::Status::skip: out << "skip: " << o.detail << '\n'; return kOk;
    case InstanceOutcome::Status::mismatch: out << "mismatch: " << o.detail << '\n'; return kNo;
  }
  return kOk;
}

void write_artifacts(const CampaignReport& report, CampaignKind kind, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  write_file((fs::path(dir) / "report.txt").string(), report.summary());
  for (const Mismatch& m : report.mismatches) {
    const std::string prefix = (fs::path(dir) / ("mismatch-" + std::to_string(m.instance_id))).string();
    // The pair lives in Col(g, h x K2) for unloop, in Col(g, h) otherwise.
    const Graph target = kind == CampaignKind::unloop ? product_with_k2(m.h) : m.h;
    VertexMap alpha = m.alpha;
    VertexMap beta = m.beta;
    if (alpha.empty()) {
      alpha.assign(static_cast<std::size_t>(m.g.order()), 0);
      beta = alpha;
    }
    write_file(prefix + ".instance", serialize_instance(Instance{m.g, target, alpha, beta}));
    write_file(prefix + ".h.graph", serialize_graph(m.h));
  }
}

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  const auto kind = parse_campaign(a.campaign);
  if (!kind) throw PreconditionError("unknown campaign " + a.campaign);
  if (!a.replay.empty()) return replay_mismatch(*kind, a.replay, out, err);

  GeneratorSpec spec = default_spec(*kind, a.max_g, a.max_h);
  spec.seed = a.seed;
  spec.threads = a.threads;
  spec.budget = a.budget;
  if (a.count > 0) {
    spec.mode = GenerationMode::random;
    spec.count = a.count;
  }
  const CampaignReport report = run_campaign(*kind, spec);
  out << report.summary();
  err << "wall-time " << std::fixed << std::setprecision(2) << report.wall_seconds << "s\n";
  if (!a.out_dir.empty()) write_artifacts(report, *kind, a.out_dir);
  return report.mismatches.empty() ? kOk : kNo;
}

int cmd_export(const std::vector<std::string>& files, bool dot, std::size_t cap,
               std::ostream& out, std::ostream& err) {
  Graph g;
  Graph h;
  if (files.size() == 1) {
    const Instance inst = load_instance(files[0], err);
    g = inst.g;
    h = inst.h;
  } else if (files.size() == 2) {
    g = load_graph(files[0], err);
    h = load_graph(files[1], err);
  } else {
    throw PreconditionError("export-colgraph takes an instance file or two graph files");
  }
  const Graph col = export_col_graph(g, h, cap);
  out << (dot ? to_dot(col) : serialize_graph(col));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homomorphism reconfiguration toolkit", "hrecol"};
  app.require_subcommand(1, 1);

  std::string props_file;
  auto* props = app.add_subcommand("props", "Structural properties of a graph");
  props->add_option("graph", props_file, "Graph file")->required();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Decide reachability and print a shortest path");
  solve->add_option("instance", solve_args.file, "Instance file")->required();
  solve->add_option("--via", solve_args.via, "Solve through a reduction")
      ->check(CLI::IsMember({"clique-incidence"}));
  solve->add_option("--budget", solve_args.budget, "State budget");
  solve->add_option("--out", solve_args.out_path, "Write the path file here");

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Rewrite an instance through a reduction");
  reduce->add_option("instance", reduce_args.file, "Instance file")->required();
  reduce->add_option("--method", reduce_args.method, "Reduction")
      ->required()
      ->check(CLI::IsMember(
          {"clique-incidence", "reflexive-closure", "bipartite-to-reflexive", "product-k2"}));
  reduce->add_option("--out", reduce_args.out_path, "Write the reduced instance here");
  reduce->add_option("--map", reduce_args.map_path, "Write the vertex mapping here");

  std::string verify_instance;
  std::string verify_path_file;
  auto* verify = app.add_subcommand("verify", "Replay a path file against an instance");
  verify->add_option("instance", verify_instance, "Instance file")->required();
  verify->add_option("path", verify_path_file, "Path file")->required();

  std::string dismantle_file;
  std::string keep;
  auto* dism = app.add_subcommand("dismantle", "Fold a graph down to a stiff core");
  dism->add_option("graph", dismantle_file, "Graph file")->required();
  dism->add_option("--keep", keep, "Comma-separated vertices that must not be folded");

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("oracle-compare", "Run an oracle-equivalence campaign");
  compare->add_option("--campaign", compare_args.campaign, "Campaign")
      ->required()
      ->check(CLI::IsMember({"eqtowro", "unloop", "dismantle", "product", "closure", "recon"}));
  compare->add_option("--max-g", compare_args.max_g, "Largest source order")
      ->check(CLI::Range(0, 10));
  compare->add_option("--max-h", compare_args.max_h, "Largest target order")
      ->check(CLI::Range(0, 10));
  compare->add_option("--seed", compare_args.seed, "Random seed");
  compare->add_option("--count", compare_args.count, "Random instances (0 = exhaustive)");
  compare->add_option("--threads", compare_args.threads, "Worker threads");
  compare->add_option("--budget", compare_args.budget, "Generation budget");
  compare->add_option("--out", compare_args.out_dir, "Counterexample directory");
  compare->add_option("--replay", compare_args.replay,
                      "Re-check a saved mismatch (path prefix without extension)");

  std::vector<std::string> export_files;
  bool dot = false;
  std::size_t cap = 5000;
  auto* exp = app.add_subcommand("export-colgraph", "Write Col(g, h) as a graph");
  exp->add_option("files", export_files, "Instance file, or graph files g and h")
      ->required()
      ->expected(1, 2);
  exp->add_flag("--dot", dot, "Emit Graphviz DOT");
  exp->add_option("--cap", cap, "Refuse when |V(h)|^|V(g)| exceeds this");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*props) return cmd_props(props_file, out, err);
    if (*solve) return cmd_solve(solve_args, out, err);
    if (*reduce) return cmd_reduce(reduce_args, out, err);
    if (*verify) return cmd_verify(verify_instance, verify_path_file, out, err);
    if (*dism) return cmd_dismantle(dismantle_file, keep, out, err);
    if (*compare) return cmd_compare(compare_args, out, err);
    if (*exp) return cmd_export(export_files, dot, cap, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hrecol::cli
