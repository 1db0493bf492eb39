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

// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "hrecol/col_space.hpp"
#include "hrecol/error.hpp"
#include "hrecol/format.hpp"
#include "hrecol/graph_algorithms.hpp"
#include "hrecol/harness.hpp"
#include "hrecol/incidence.hpp"
#include "hrecol/product.hpp"
#include "hrecol/solver.hpp"
#include "hrecol/structure.hpp"

namespace {

using namespace hrecol;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Graph host7() {
  GraphBuilder b(7, "h7");
  b.add_all_loops();
  const int edges[][2] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {2, 5}, {5, 6}, {3, 6}};
  for (const auto& e : edges) b.add_edge(e[0], e[1]);
  return b.build();
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

void fail(Verdict& v, const std::string& why) {
  if (v.pass) v.detail = why;
  v.pass = false;
}

std::string campaign_line(const CampaignReport& r) {
  std::ostringstream os;
  os << r.campaign << ": " << r.instances_run << " instances, " << r.agreements << " agree, "
     << r.skips << " skipped, " << r.mismatches.size() << " mismatches, " << r.paths_verified
     << " paths verified, " << r.wall_seconds << "s";
  return os.str();
}

void require_clean(Verdict& v, const CampaignReport& r) {
  if (!r.mismatches.empty()) {
    fail(v, campaign_line(r) + "; first: " + r.mismatches.front().detail);
  } else if (!r.consistent()) {
    fail(v, campaign_line(r) + "; inconsistent counters");
  } else if (r.agreements == 0) {
    fail(v, campaign_line(r) + "; nothing checked");
  }
}

Verdict criterion1() {
  Verdict v;
  const auto t0 = Clock::now();
  const Graph h = host7();
  const CliqueIncidence b = build_clique_incidence(h, false);
  const CliqueIncidence bp = build_clique_incidence(h, true);
  const double secs = seconds_since(t0);
  const std::vector<std::vector<Vertex>> expected{{0, 1, 2}, {0, 3, 4}, {2, 5}, {3, 6}, {5, 6}};
  std::vector<std::vector<Vertex>> cliques;
  for (int k = 0; k < b.clique_count(); ++k) cliques.push_back(b.members(h.order() + k));
  std::sort(cliques.begin(), cliques.end());
  if (b.incidence().order() != 12 || b.incidence().edge_count() != 12) fail(v, "B shape");
  if (bp.incidence().order() != 19 || bp.incidence().edge_count() != 19) fail(v, "B' shape");
  if (cliques != expected) fail(v, "clique sets differ");
  if (secs >= 1.0) fail(v, "took " + std::to_string(secs) + "s");
  if (v.pass) v.detail = "B 12/12, B' 19/19, cliques match, " + std::to_string(secs) + "s";
  return v;
}

Verdict criterion2(CampaignReport& report) {
  Verdict v;
  report = campaign_eqtowro(default_spec(CampaignKind::eqtowro, 3, 4));
  require_clean(v, report);
  if (v.pass) v.detail = campaign_line(report);
  return v;
}

// Independent recount of the expansion bounds over the criterion-2 family.
Verdict criterion3(const CampaignReport& eq) {
  Verdict v;
  const GeneratorSpec spec = default_spec(CampaignKind::eqtowro, 3, 4);
  const auto gs = generate_graphs(spec.g, GenerationMode::exhaustive);
  const auto hs = generate_graphs(spec.h, GenerationMode::exhaustive);
  std::size_t moves = 0;
  std::size_t paths = 0;
  std::size_t violations = 0;
  for (const Graph& g : gs) {
    if (g.edge_count() == 0) continue;
    const EdgeIncidence ei = build_edge_incidence(g);
    for (const Graph& h : hs) {
      const CliqueIncidence ci = build_clique_incidence(h, true);
      const ColSpace a = ColSpace::full(g, h);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const VertexMap& alpha = a.state(i);
        for (std::size_t j : a.moves(i)) {
          const VertexMap& beta = a.state(j);
          Vertex u = 0;
          while (alpha[static_cast<std::size_t>(u)] == beta[static_cast<std::size_t>(u)]) ++u;
          const RecoloringStep step{u, alpha[static_cast<std::size_t>(u)],
                                    beta[static_cast<std::size_t>(u)]};
          const RecoloringPath p = expand_move(alpha, step, ei, ci);
          ++moves;
          if (p.size() > static_cast<std::size_t>(g.degree(u) + 1) ||
              !verify_path(ei.incidence(), ci.incidence(), p, lift_hom(beta, ei, ci))) {
            ++violations;
          }
        }
        if (i == 0) continue;
        if (!a.connected(0, i)) continue;
        const RecoloringPath p = a.path(0, i);
        std::size_t bound = 0;
        for (const RecoloringStep& s : p.steps) bound += static_cast<std::size_t>(g.degree(s.vertex) + 1);
        const RecoloringPath f = transfer_path_forward(p, ei, ci);
        ++paths;
        if (f.size() > bound) ++violations;
      }
    }
  }
  if (violations) fail(v, std::to_string(violations) + " bound violations");
  if (!eq.mismatches.empty()) fail(v, "criterion-2 campaign reported mismatches");
  if (moves == 0) fail(v, "no moves examined");
  if (v.pass) {
    v.detail = std::to_string(moves) + " expanded moves, " + std::to_string(paths) +
               " forward paths, 0 violations";
  }
  return v;
}

Verdict criterion4() {
  Verdict v;
  const CampaignReport r = run_campaign(CampaignKind::closure, default_spec(CampaignKind::closure, 4, 5));
  require_clean(v, r);
  if (r.wall_seconds > 300) fail(v, "over 5 minutes");
  if (v.pass) v.detail = campaign_line(r);
  return v;
}

Verdict criterion5() {
  Verdict v;
  const CampaignReport r = campaign_unloop(default_spec(CampaignKind::unloop, 4, 4));
  require_clean(v, r);

  const Graph h = path_graph(4);
  const Graph g = complete_graph(2);
  const Graph t = product_with_k2(h);
  const auto pv = [](Vertex a, int s) { return product_vertex(a, s); };
  const RecoloringPath s{{pv(0, 0), pv(1, 1)},
                         {{1, pv(1, 1), pv(0, 0)},
                          {0, pv(0, 0), pv(1, 1)},
                          {1, pv(0, 0), pv(2, 0)},
                          {0, pv(1, 1), pv(3, 1)},
                          {1, pv(2, 0), pv(3, 1)},
                          {0, pv(3, 1), pv(2, 0)}}};
  const VertexMap beta{pv(2, 0), pv(3, 1)};
  if (!verify_path(g, reflexive_closure(t), s, beta)) fail(v, "P4 input is not a looped walk");
  const RecoloringPath out = unloop_sequence(s, g, t, *bipartition(g), product_sides(h));
  if (out.size() != 2 || !verify_path(g, t, out, beta)) fail(v, "P4 example did not reduce to 2 steps");
  if (v.pass) v.detail = campaign_line(r) + "; P4 example 6 -> 2 steps";
  return v;
}

Verdict criterion6() {
  Verdict v;
  const CampaignReport r = campaign_dismantle(default_spec(CampaignKind::dismantle, 3, 4));
  require_clean(v, r);

  const Graph h = host7();
  const CliqueIncidence bp = build_clique_incidence(h, true);
  const CliqueIncidence b = build_clique_incidence(h, false);
  std::vector<Vertex> keep(static_cast<std::size_t>(b.incidence().order()));
  std::iota(keep.begin(), keep.end(), 0);
  const DismantlingSequence seq = dismantle_onto(bp.incidence(), keep);
  bool only_false = seq.folds.size() == 7;
  for (const Fold& f : seq.folds) only_false = only_false && bp.is_false_clique(f.folded);
  if (!only_false) fail(v, "B'(h7) did not fold exactly the 7 false cliques");
  if (seq.residual.edges() != b.incidence().edges() || seq.residual.order() != b.incidence().order()) {
    fail(v, "residual differs from B(h7)");
  }

  std::size_t checked = 0;
  const auto gs = generate_graphs({1, 3, {Predicate::irreflexive, Predicate::connected}},
                                  GenerationMode::exhaustive);
  for (const Graph& g : gs) {
    const InstanceOutcome o = check_dismantling(g, seq);
    if (o.status == InstanceOutcome::Status::mismatch) fail(v, "B'(h7) fold check: " + o.detail);
    if (o.status == InstanceOutcome::Status::agree) ++checked;
  }
  if (checked == 0) fail(v, "no B'(h7) instances checked");
  if (v.pass) {
    v.detail = campaign_line(r) + "; B'(h7) folds 7 false cliques onto B(h7), " +
               std::to_string(checked) + " sources agree";
  }
  return v;
}

Verdict criterion7() {
  Verdict v;
  const CampaignReport r = run_campaign(CampaignKind::recon, default_spec(CampaignKind::recon, 3, 4));
  require_clean(v, r);
  if (v.pass) v.detail = campaign_line(r);
  return v;
}

Verdict criterion8() {
  Verdict v;
  namespace fs = std::filesystem;
  // Exactly one million states: every map P6 -> K10 with loops on both sides.
  const Graph g = path_graph(6, true);
  const Graph h = complete_graph(10, true);
  const VertexMap alpha(6, 0);
  const VertexMap beta{9, 8, 7, 6, 5, 4};
  auto t0 = Clock::now();
  const ReachResult r = reachable(Instance{g, h, alpha, beta}, SolverOptions{1'000'000});
  const double bfs = seconds_since(t0);
  if (!r.reachable || !r.path || r.path->size() != 6) fail(v, "wrong verdict on the 10^6 instance");
  t0 = Clock::now();
  const ColSpace full = ColSpace::full(g, h, 1'000'000);
  const double explore = seconds_since(t0);
  if (full.size() != 1'000'000) fail(v, "expected 10^6 states");
  if (bfs > 30 || explore > 30) fail(v, "over 30 s");

  // The target differs everywhere, so BFS must visit nearly all 3^13 maps.
  const fs::path file = fs::temp_directory_path() / "hrecol-acceptance-p13.instance";
  const Graph p13 = path_graph(13, true);
  const Graph k3 = complete_graph(3, true);
  const VertexMap b13(13, 2);
  const VertexMap a13(13, 0);
  std::ofstream(file) << serialize_instance(Instance{p13, k3, a13, b13});
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"solve", file.string(), "--budget", "1000000"}, out, err);
  fs::remove(file);
  if (code != 3) fail(v, "budget overrun exit code " + std::to_string(code));
  if (out.str().find("REACHABLE") != std::string::npos) fail(v, "verdict printed on overrun");
  if (v.pass) {
    std::ostringstream os;
    os << "10^6 states: BFS " << bfs << "s, full exploration " << explore
       << "s; 3^13 instance exits 3";
    v.detail = os.str();
  }
  return v;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, const std::function<Verdict()>& f) {
    Verdict v;
    try {
      v = f();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << v.detail << std::endl;
  };
  hrecol::CampaignReport eq;
  report(1, criterion1);
  report(2, [&] { return criterion2(eq); });
  report(3, [&] { return criterion3(eq); });
  report(4, criterion4);
  report(5, criterion5);
  report(6, criterion6);
  report(7, criterion7);
  report(8, criterion8);
  return all ? 0 : 1;
}
