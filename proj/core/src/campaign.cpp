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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hrecol/col_space.hpp"
#include "hrecol/error.hpp"
#include "hrecol/graph_algorithms.hpp"
#include "hrecol/harness.hpp"
#include "hrecol/incidence.hpp"
#include "hrecol/product.hpp"
#include "hrecol/structure.hpp"

namespace hrecol {

namespace {

constexpr std::pair<CampaignKind, std::string_view> kCampaignNames[] = {
    {CampaignKind::eqtowro, "eqtowro"},   {CampaignKind::unloop, "unloop"},
    {CampaignKind::dismantle, "dismantle"}, {CampaignKind::product, "product"},
    {CampaignKind::closure, "closure"},   {CampaignKind::recon, "recon"},
};

using Status = InstanceOutcome::Status;

// Thrown inside a check to stop at the first disagreement.
struct Disagreement {
  std::string detail;
  VertexMap alpha;
  VertexMap beta;
};

struct Skip {
  std::string reason;
};

[[noreturn]] void disagree(std::string detail, VertexMap alpha = {}, VertexMap beta = {}) {
  throw Disagreement{std::move(detail), std::move(alpha), std::move(beta)};
}

void require(bool condition, const char* reason) {
  if (!condition) throw Skip{reason};
}

RecoloringStep step_between(const VertexMap& a, const VertexMap& b) {
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a[u] != b[u]) return {static_cast<Vertex>(u), a[u], b[u]};
  }
  throw std::logic_error("states are equal");
}

void certify(const Graph& g, const Graph& h, const RecoloringPath& path, const VertexMap& end,
             const std::string& what, const VertexMap& alpha, const VertexMap& beta,
             InstanceOutcome& out) {
  const PathCheck check = verify_path(g, h, path, end);
  if (!check) {
    std::string where =
        check.failed_step ? " at step " + std::to_string(*check.failed_step) : std::string();
    disagree(what + " is invalid" + where + ": " + check.reason, alpha, beta);
  }
  ++out.paths_verified;
}

// Reachability agreement between two labellings of the same states: pairs in
// the same group must be connected on both sides or on neither. Entries with
// a negative group take no part.
void compare_partitions(const std::vector<std::size_t>& left,
                        const std::vector<std::size_t>& right, const std::vector<int>& group,
                        const std::vector<VertexMap>& states, const std::string& left_name,
                        const std::string& right_name, InstanceOutcome& out) {
  std::map<std::pair<int, std::size_t>, std::size_t> left_rep;
  std::map<std::pair<int, std::size_t>, std::size_t> right_rep;
  std::map<int, std::size_t> group_sizes;
  for (std::size_t i = 0; i < left.size(); ++i) {
    const int gr = group.empty() ? 0 : group[i];
    if (gr < 0) continue;
    ++group_sizes[gr];
    if (auto [it, fresh] = left_rep.try_emplace({gr, left[i]}, i); !fresh) {
      if (right[it->second] != right[i]) {
        disagree("reachable in " + left_name + " but not in " + right_name,
                 states[it->second], states[i]);
      }
    }
    if (auto [it, fresh] = right_rep.try_emplace({gr, right[i]}, i); !fresh) {
      if (left[it->second] != left[i]) {
        disagree("reachable in " + right_name + " but not in " + left_name,
                 states[it->second], states[i]);
      }
    }
  }
  for (const auto& [gr, n] : group_sizes) out.pairs_checked += n * n;
}

class PairPlan {
 public:
  PairPlan(const ColSpace& space, const CheckOptions& options) {
    const std::size_t n = space.size();
    if (options.only_pair) {
      const auto a = space.index_of(options.only_pair->first);
      const auto b = space.index_of(options.only_pair->second);
      if (!a || !b) throw Skip{"pair is not a homomorphism pair"};
      only_ = true;
      pairs_.emplace_back(*a, *b);
      return;
    }
    if (n * n <= options.pair_limit) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) pairs_.emplace_back(i, j);
        }
      }
      return;
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < options.sampled_pairs; ++k) {
      const std::size_t i = pick(rng);
      const std::size_t j = pick(rng);
      if (i != j) pairs_.emplace_back(i, j);
    }
  }

  bool only() const noexcept { return only_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
  // Restricts the partition check to the selected pair.
  std::vector<int> groups(std::size_t n) const {
    if (!only_) return {};
    std::vector<int> g(n, -1);
    g[pairs_[0].first] = 0;
    g[pairs_[0].second] = 0;
    return g;
  }

 private:
  bool only_ = false;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

std::vector<VertexMap> all_states(const ColSpace& space) {
  std::vector<VertexMap> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.state(i));
  return out;
}

std::vector<std::size_t> labels_of(const ColSpace& space, const std::vector<VertexMap>& maps,
                                   const std::string& name, const std::vector<VertexMap>& states) {
  std::vector<std::size_t> out(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto idx = space.index_of(maps[i]);
    if (!idx) disagree("image is not a state of " + name, states[i], maps[i]);
    out[i] = space.component(*idx);
  }
  return out;
}

std::vector<std::size_t> components(const ColSpace& space) {
  std::vector<std::size_t> out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out[i] = space.component(i);
  return out;
}

// -- per-campaign checks ----------------------------------------------------

void check_eqtowro(const Graph& g, const Graph& h, const CheckOptions& opts,
                   InstanceOutcome& out) {
  require(is_reflexive(g) && is_reflexive(h), "non-reflexive input");
  require(is_connected(g) && is_connected(h), "disconnected input");
  // E(g) drops loops, so a single looped vertex would lose its constraint.
  require(g.edge_count() > 0, "g has no edges");
  require(!has_induced_diamond(h), "induced diamond in h");
  const CliqueIncidence with_false = build_clique_incidence(h, true);
  const CliqueIncidence plain = build_clique_incidence(h, false);
  const EdgeIncidence ei = build_edge_incidence(g);
  const Graph& eg = ei.incidence();
  const Graph& bp = with_false.incidence();
  const Graph& b = plain.incidence();

  const ColSpace a = ColSpace::full(g, h, opts.state_budget);
  const PairPlan plan(a, opts);
  const std::vector<VertexMap> states = all_states(a);
  std::vector<VertexMap> lifts;
  std::vector<VertexMap> retracted;
  for (const VertexMap& s : states) {
    lifts.push_back(lift_hom(s, ei, with_false));
    retracted.push_back(retract_false_cliques(lifts.back(), with_false));
  }
  const ColSpace l = ColSpace::explore(eg, bp, lifts, opts.state_budget);
  const ColSpace r = ColSpace::explore(eg, b, retracted, opts.state_budget);
  const auto groups = plan.groups(states.size());
  compare_partitions(components(a), labels_of(l, lifts, "Col(E(g),B'(h))", states), groups,
                     states, "Col(g,h)", "Col(E(g),B'(h))", out);
  compare_partitions(components(a), labels_of(r, retracted, "Col(E(g),B(h))", states), groups,
                     states, "Col(g,h)", "Col(E(g),B(h))", out);

  // Every move of Col(g, h) expands within the degree bound.
  for (std::size_t i = 0; i < a.size() && !plan.only(); ++i) {
    for (std::size_t j : a.moves(i)) {
      const RecoloringStep step = step_between(states[i], states[j]);
      const RecoloringPath p = expand_move(states[i], step, ei, with_false);
      const auto bound = static_cast<std::size_t>(g.degree(step.vertex) + 1);
      if (p.size() > bound) {
        disagree("expanded move has length " + std::to_string(p.size()) + " > " +
                     std::to_string(bound),
                 states[i], states[j]);
      }
      certify(eg, bp, p, lifts[j], "expanded move", states[i], states[j], out);
    }
  }

  for (const auto& [i, j] : plan.pairs()) {
    if (a.connected(i, j)) {
      const RecoloringPath p = a.path(i, j);
      std::size_t bound = 0;
      for (const RecoloringStep& s : p.steps) bound += static_cast<std::size_t>(g.degree(s.vertex) + 1);
      const RecoloringPath fwd = transfer_path_forward(p, ei, with_false);
      if (fwd.size() > bound) {
        disagree("forward path has length " + std::to_string(fwd.size()) + " > " +
                     std::to_string(bound),
                 states[i], states[j]);
      }
      certify(eg, bp, fwd, lifts[j], "forward path", states[i], states[j], out);
      certify(g, h, transfer_path_backward(fwd, ei, with_false), states[j], "restricted path",
              states[i], states[j], out);
      certify(eg, b, retract_false_cliques(fwd, with_false), retracted[j], "retracted path",
              states[i], states[j], out);
    }
    const auto li = l.index_of(lifts[i]);
    const auto lj = l.index_of(lifts[j]);
    if (l.connected(*li, *lj)) {
      certify(g, h, transfer_path_backward(l.path(*li, *lj), ei, with_false), states[j],
              "backward path", states[i], states[j], out);
    }
  }
}

void check_closure(const Graph& g, const Graph& h, const CheckOptions& opts,
                   InstanceOutcome& out) {
  require(is_irreflexive(g), "g has loops");
  require(is_connected(g), "disconnected g");
  require(g.edge_count() > 0, "g has no edges");
  require(is_reflexive(h), "h not reflexive");
  require(is_square_free(h), "h has a square");
  const Graph gc = reflexive_closure(g);
  const ColSpace a = ColSpace::full(g, h, opts.state_budget);
  const ColSpace c = ColSpace::full(gc, h, opts.state_budget);
  const PairPlan plan(a, opts);
  const std::vector<VertexMap> states = all_states(a);
  compare_partitions(components(a), labels_of(c, states, "Col(g°,h)", states),
                     plan.groups(states.size()), states, "Col(g,h)", "Col(g°,h)", out);
  if (plan.only()) return;
  if (c.size() != a.size()) disagree("Col(g°,h) has a different state count");

  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j : a.moves(i)) {
      const RecoloringPath p = expand_move_reflexive(g, h, states[i], states[j]);
      if (p.size() > 2) {
        disagree("reflexive expansion has length " + std::to_string(p.size()), states[i],
                 states[j]);
      }
      certify(gc, h, p, states[j], "reflexive expansion", states[i], states[j], out);
    }
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t m : c.moves(k)) {
      if (!col_adjacent(g, h, c.state(k), c.state(m))) {
        disagree("Col(g°,h) move missing from Col(g,h)", c.state(k), c.state(m));
      }
    }
  }
}

// Orientation of a map g -> h x K2: 0 or 1 when every vertex lands on its
// own side (or every vertex on the other), -1 when mixed.
int orientation(const VertexMap& map, const Bipartition& g_sides, const Bipartition& t_sides) {
  int o = -1;
  for (std::size_t u = 0; u < map.size(); ++u) {
    const int here = t_sides.side[static_cast<std::size_t>(map[u])] ^ g_sides.side[u];
    if (o == -1) o = here;
    if (o != here) return -1;
  }
  return o == -1 ? 0 : o;
}

void check_unloop(const Graph& g, const Graph& h, const CheckOptions& opts,
                  InstanceOutcome& out) {
  const auto g_sides = bipartition(g);
  require(g_sides.has_value(), "g not bipartite");
  require(is_irreflexive(h), "h has loops");
  require(is_square_free(h), "h has a square");
  const Graph t = product_with_k2(h);
  const Bipartition t_sides = product_sides(h);
  const Graph tc = reflexive_closure(t);

  const ColSpace a = ColSpace::full(g, t, opts.state_budget);
  const PairPlan plan(a, opts);
  const std::vector<VertexMap> states = all_states(a);
  std::vector<int> groups(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    groups[i] = orientation(states[i], *g_sides, t_sides);
  }
  if (plan.only()) {
    const auto [i, j] = plan.pairs()[0];
    if (groups[i] < 0 || groups[i] != groups[j]) throw Skip{"misaligned endpoints"};
    const auto only = plan.groups(states.size());
    for (std::size_t k = 0; k < groups.size(); ++k) groups[k] = only[k];
  }
  const ColSpace c = ColSpace::explore(g, tc, states, opts.state_budget);
  compare_partitions(components(a), labels_of(c, states, "Col(g,(hxK2)°)", states), groups,
                     states, "Col(g,hxK2)", "Col(g,(hxK2)°)", out);

  for (const auto& [i, j] : plan.pairs()) {
    if (groups[i] < 0 || groups[i] != groups[j]) continue;
    const auto ci = c.index_of(states[i]);
    const auto cj = c.index_of(states[j]);
    if (!c.connected(*ci, *cj)) continue;
    RecoloringPath rewritten;
    try {
      rewritten = unloop_sequence(c.path(*ci, *cj), g, t, *g_sides, t_sides);
    } catch (const PreconditionError& e) {
      disagree(std::string("unloop_sequence failed: ") + e.what(), states[i], states[j]);
    }
    certify(g, t, rewritten, states[j], "unlooped path", states[i], states[j], out);
  }
}

RecoloringPath to_original(const RecoloringPath& core_path, const DismantlingSequence& seq) {
  const auto lift = [&](Vertex x) { return seq.remaining[static_cast<std::size_t>(x)]; };
  RecoloringPath out;
  out.start.reserve(core_path.start.size());
  for (Vertex x : core_path.start) out.start.push_back(lift(x));
  for (const RecoloringStep& s : core_path.steps) {
    out.steps.push_back({s.vertex, lift(s.from), lift(s.to)});
  }
  return out;
}

void dismantle_checks(const Graph& g, const DismantlingSequence& seq, const CheckOptions& opts,
                      InstanceOutcome& out) {
  const Graph& h = seq.graph;
  if (!is_valid_dismantling(seq)) disagree("invalid dismantling sequence");
  const ColSpace a = ColSpace::full(g, h, opts.state_budget);
  const ColSpace core = ColSpace::full(g, seq.residual, opts.state_budget);
  const PairPlan plan(a, opts);
  const std::vector<VertexMap> states = all_states(a);

  std::vector<FoldImage> folded;
  std::vector<VertexMap> images;
  folded.reserve(states.size());
  for (const VertexMap& s : states) {
    folded.push_back(fold_retraction_path(g, s, seq));
    if (!plan.only()) certify(g, h, folded.back().path, folded.back().image, "fold path", s, s, out);
    images.push_back(seq.to_residual(folded.back().image));
  }
  compare_partitions(components(a), labels_of(core, images, "Col(g,core)", states),
                     plan.groups(states.size()), states, "Col(g,h)", "Col(g,core)", out);

  for (const auto& [i, j] : plan.pairs()) {
    const auto ci = core.index_of(images[i]);
    const auto cj = core.index_of(images[j]);
    if (!core.connected(*ci, *cj)) continue;
    RecoloringPath p = folded[i].path;
    p.append(to_original(core.path(*ci, *cj), seq));
    p.append(folded[j].path.reversed());
    certify(g, h, p.normalized(), states[j], "constructive fold path", states[i], states[j], out);
  }
}

void check_product(const Graph& g, const Graph& h, const CheckOptions& opts,
                   InstanceOutcome& out) {
  const auto g_sides = bipartition(g);
  require(g_sides.has_value(), "g not bipartite");
  require(is_connected(g), "disconnected g");
  const Graph t = product_with_k2(h);
  const ColSpace a = ColSpace::full(g, h, opts.state_budget);
  const PairPlan plan(a, opts);
  const std::vector<VertexMap> states = all_states(a);
  std::vector<VertexMap> lifts;
  for (const VertexMap& s : states) lifts.push_back(product_lift(s, *g_sides));
  const ColSpace p = ColSpace::explore(g, t, lifts, opts.state_budget);
  compare_partitions(components(a), labels_of(p, lifts, "Col(g,hxK2)", states),
                     plan.groups(states.size()), states, "Col(g,h)", "Col(g,hxK2)", out);

  for (const auto& [i, j] : plan.pairs()) {
    if (a.connected(i, j)) {
      certify(g, t, product_lift(a.path(i, j), *g_sides), lifts[j], "lifted path", states[i],
              states[j], out);
    }
    const auto pi = p.index_of(lifts[i]);
    const auto pj = p.index_of(lifts[j]);
    if (p.connected(*pi, *pj)) {
      certify(g, h, product_project(p.path(*pi, *pj)), states[j], "projected path", states[i],
              states[j], out);
    }
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void check_recon(const Graph& g, const Graph& h, const CheckOptions& opts, InstanceOutcome& out) {
  require(is_connected(g) && is_connected(h), "disconnected input");
  const ColSpace a = ColSpace::full(g, h, opts.state_budget);
  const PairPlan plan(a, opts);
  const std::vector<VertexMap> states = all_states(a);
  const std::size_t n = states.size();
  if (n > 4096) throw BudgetExceeded("too many homomorphisms for Hom-graph comparison");

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!hom_adjacent(g, h, states[i], states[j])) continue;
      parent[find_root(parent, i)] = find_root(parent, j);
      if (plan.only()) continue;
      certify(g, h, hom_edge_to_col_path(g, h, states[i], states[j]), states[j],
              "Hom-edge path", states[i], states[j], out);
    }
  }
  std::vector<std::size_t> hom_labels(n);
  for (std::size_t i = 0; i < n; ++i) hom_labels[i] = find_root(parent, i);
  compare_partitions(components(a), hom_labels, plan.groups(n), states, "Col(g,h)", "Hom(g,h)",
                     out);
}

template <typename Check>
InstanceOutcome guarded(Check&& check) {
  InstanceOutcome out;
  try {
    check(out);
  } catch (const Disagreement& d) {
    out.status = Status::mismatch;
    out.detail = d.detail;
    if (!d.alpha.empty()) out.witness.emplace(d.alpha, d.beta);
  } catch (const Skip& s) {
    out.status = Status::skip;
    out.detail = s.reason;
  } catch (const BudgetExceeded&) {
    out.status = Status::skip;
    out.detail = "state budget exceeded";
  } catch (const DiamondError&) {
    out.status = Status::skip;
    out.detail = "induced diamond in h";
  } catch (const PreconditionError& e) {
    out.status = Status::skip;
    out.detail = std::string("precondition violated: ") + e.what();
  } catch (const std::logic_error& e) {
    out.status = Status::mismatch;
    out.detail = std::string("internal error: ") + e.what();
  }
  return out;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

}  // namespace

std::string_view to_string(CampaignKind kind) {
  for (const auto& [value, name] : kCampaignNames) {
    if (value == kind) return name;
  }
  return "?";
}

std::optional<CampaignKind> parse_campaign(std::string_view name) {
  for (const auto& [value, text] : kCampaignNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

GeneratorSpec default_spec(CampaignKind kind, int max_g, int max_h) {
  using P = Predicate;
  GeneratorSpec spec;
  spec.g.max_vertices = max_g;
  spec.h.max_vertices = max_h;
  switch (kind) {
    case CampaignKind::eqtowro:
      spec.g.predicates = {P::reflexive, P::connected};
      spec.h.predicates = {P::reflexive, P::connected, P::diamond_free};
      break;
    case CampaignKind::unloop:
      spec.g.predicates = {P::bipartite, P::connected};
      spec.h.predicates = {P::irreflexive, P::square_free};
      break;
    case CampaignKind::dismantle:
    case CampaignKind::recon:
      spec.g.predicates = {P::connected};
      spec.h.predicates = {P::connected};
      break;
    case CampaignKind::product:
      spec.g.predicates = {P::bipartite, P::connected};
      spec.h.predicates = {P::connected};
      break;
    case CampaignKind::closure:
      spec.g.predicates = {P::irreflexive, P::connected};
      spec.h.predicates = {P::reflexive, P::square_free};
      break;
  }
  return spec;
}

InstanceOutcome check_instance(CampaignKind kind, const Graph& g, const Graph& h,
                               const CheckOptions& options) {
  return guarded([&](InstanceOutcome& out) {
    require(!g.empty() && !h.empty(), "empty input");
    switch (kind) {
      case CampaignKind::eqtowro: check_eqtowro(g, h, options, out); break;
      case CampaignKind::unloop: check_unloop(g, h, options, out); break;
      case CampaignKind::dismantle: dismantle_checks(g, dismantle(h), options, out); break;
      case CampaignKind::product: check_product(g, h, options, out); break;
      case CampaignKind::closure: check_closure(g, h, options, out); break;
      case CampaignKind::recon: check_recon(g, h, options, out); break;
    }
  });
}

InstanceOutcome check_dismantling(const Graph& g, const DismantlingSequence& seq,
                                  const CheckOptions& options) {
  return guarded([&](InstanceOutcome& out) {
    require(!g.empty() && !seq.graph.empty(), "empty input");
    dismantle_checks(g, seq, options, out);
  });
}

void CampaignReport::merge(const CampaignReport& other) {
  if (campaign.empty()) campaign = other.campaign;
  instances_run += other.instances_run;
  agreements += other.agreements;
  skips += other.skips;
  for (const auto& [reason, n] : other.skip_reasons) skip_reasons[reason] += n;
  pairs_checked += other.pairs_checked;
  paths_verified += other.paths_verified;
  wall_seconds += other.wall_seconds;
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
  std::stable_sort(mismatches.begin(), mismatches.end(),
                   [](const Mismatch& x, const Mismatch& y) { return x.instance_id < y.instance_id; });
}

std::string CampaignReport::summary() const {
  std::ostringstream os;
  os << "campaign " << campaign << '\n'
     << "instances " << instances_run << '\n'
     << "agreements " << agreements << '\n'
     << "mismatches " << mismatches.size() << '\n'
     << "skips " << skips << '\n';
  for (const auto& [reason, n] : skip_reasons) os << "skip-reason " << n << ' ' << reason << '\n';
  os << "pairs-checked " << pairs_checked << '\n' << "paths-verified " << paths_verified << '\n';
  for (const Mismatch& m : mismatches) {
    os << "mismatch " << m.instance_id << " g=" << m.g.name() << " h=" << m.h.name();
    if (!m.alpha.empty()) os << " alpha=" << to_string(m.alpha) << " beta=" << to_string(m.beta);
    os << ": " << m.detail << '\n';
  }
  return os.str();
}

CampaignReport run_campaign(CampaignKind kind, const GeneratorSpec& spec,
                            const CheckOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::pair<Graph, Graph>> work;
  if (spec.mode == GenerationMode::exhaustive) {
    const auto gs = generate_graphs(spec.g, spec.mode, spec.seed, 0, spec.budget);
    const auto hs = generate_graphs(spec.h, spec.mode, spec.seed, 0, spec.budget);
    if (gs.size() * hs.size() > spec.budget) {
      throw BudgetExceeded("campaign needs " + std::to_string(gs.size() * hs.size()) +
                           " instances, budget is " + std::to_string(spec.budget));
    }
    for (const Graph& g : gs) {
      for (const Graph& h : hs) work.emplace_back(g, h);
    }
  } else {
    const auto gs = generate_graphs(spec.g, spec.mode, spec.seed, spec.count, spec.budget);
    const auto hs =
        generate_graphs(spec.h, spec.mode, ~spec.seed, spec.count, spec.budget);
    for (std::size_t i = 0; i < spec.count; ++i) work.emplace_back(gs[i], hs[i]);
  }

  std::vector<InstanceOutcome> outcomes(work.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      CheckOptions opts = options;
      opts.seed = instance_seed(spec.seed, i);
      outcomes[i] = check_instance(kind, work[i].first, work[i].second, opts);
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(spec.threads, 64));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  CampaignReport report;
  report.campaign = std::string(to_string(kind));
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const InstanceOutcome& o = outcomes[i];
    ++report.instances_run;
    report.pairs_checked += o.pairs_checked;
    report.paths_verified += o.paths_verified;
    switch (o.status) {
      case Status::agree: ++report.agreements; break;
      case Status::skip:
        ++report.skips;
        ++report.skip_reasons[o.detail];
        break;
      case Status::mismatch: {
        Mismatch m{i, o.detail, work[i].first, work[i].second, {}, {}};
        if (o.witness) {
          m.alpha = o.witness->first;
          m.beta = o.witness->second;
        }
        report.mismatches.push_back(std::move(m));
        break;
      }
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

CampaignReport campaign_eqtowro(const GeneratorSpec& spec) {
  return run_campaign(CampaignKind::eqtowro, spec);
}

CampaignReport campaign_unloop(const GeneratorSpec& spec) {
  return run_campaign(CampaignKind::unloop, spec);
}

CampaignReport campaign_dismantle(const GeneratorSpec& spec) {
  return run_campaign(CampaignKind::dismantle, spec);
}

}  // namespace hrecol
