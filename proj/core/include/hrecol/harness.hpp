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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hrecol/graph.hpp"
#include "hrecol/hom.hpp"
#include "hrecol/structure.hpp"

namespace hrecol {

// ---------------------------------------------------------------------------
// Instance generation

enum class Predicate {
  reflexive,
  irreflexive,
  bipartite,
  square_free,
  diamond_free,
  connected,
  has_edge,
};

std::string_view to_string(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);
bool satisfies(const Graph& g, Predicate p);

struct GraphFamily {
  int min_vertices = 1;
  int max_vertices = 3;
  std::vector<Predicate> predicates;
};

enum class GenerationMode { exhaustive, random };

struct GeneratorSpec {
  GraphFamily g;
  GraphFamily h;
  GenerationMode mode = GenerationMode::exhaustive;
  std::uint64_t seed = 0;
  // Random mode: number of (g, h) instances drawn.
  std::size_t count = 0;
  // Exhaustive mode: cap on candidate graphs enumerated per family.
  std::size_t budget = 1'000'000;
  unsigned threads = 1;
};

/// Exhaustive mode visits every labelled graph in the family: orders
/// ascending, then loop sets, then edge sets in canonical bitmask order.
/// Reflexive (irreflexive, bipartite) families only use the full (empty)
/// loop set. Random mode draws `count` graphs from a generator seeded with
/// `seed`. Throws BudgetExceeded when the exhaustive candidate count exceeds
/// `budget`.
void for_each_graph(const GraphFamily& family, GenerationMode mode, std::uint64_t seed,
                    std::size_t count, std::size_t budget,
                    const std::function<void(const Graph&)>& visit);
std::vector<Graph> generate_graphs(const GraphFamily& family, GenerationMode mode,
                                   std::uint64_t seed = 0, std::size_t count = 0,
                                   std::size_t budget = 1'000'000);

// ---------------------------------------------------------------------------
// Oracle-equivalence campaigns

enum class CampaignKind {
  eqtowro,    // Col(g,h) vs Col(E(g), B'(h)) and Col(E(g), B(h))
  unloop,     // Col(g, h x K2) vs Col(g, (h x K2)°)
  dismantle,  // Col(g, h) vs Col(g, stiff core of h)
  product,    // Col(g, h) vs Col(g, h x K2) for bipartite g
  closure,    // Col(g, h) vs Col(g°, h) for reflexive square-free h
  recon,      // Col-edge vs Hom-edge reachability
};

std::string_view to_string(CampaignKind kind);
std::optional<CampaignKind> parse_campaign(std::string_view name);

/// The families each campaign ranges over, with the given size bounds.
GeneratorSpec default_spec(CampaignKind kind, int max_g, int max_h);

struct CheckOptions {
  // All ordered pairs get path certificates when there are at most this many.
  std::size_t pair_limit = 10'000;
  // Otherwise this many seeded random pairs are certified.
  std::size_t sampled_pairs = 2'000;
  std::uint64_t seed = 0;
  std::size_t state_budget = 200'000;
  // Restricts every check to this (alpha, beta) pair.
  std::optional<std::pair<VertexMap, VertexMap>> only_pair;
};

struct InstanceOutcome {
  enum class Status { agree, mismatch, skip };

  Status status = Status::agree;
  std::string detail;  // mismatch description or skip reason
  std::optional<std::pair<VertexMap, VertexMap>> witness;
  std::size_t pairs_checked = 0;
  std::size_t paths_verified = 0;
};

/// Runs one campaign's checks on the instance graphs (g, h).
InstanceOutcome check_instance(CampaignKind kind, const Graph& g, const Graph& h,
                               const CheckOptions& options = {});

/// Runs the dismantle checks for an explicit dismantling of seq.graph, which
/// need not end in a stiff graph.
InstanceOutcome check_dismantling(const Graph& g, const DismantlingSequence& seq,
                                  const CheckOptions& options = {});

struct Mismatch {
  std::size_t instance_id = 0;
  std::string detail;
  Graph g;
  Graph h;
  // Witness pair in the campaign's comparison space: maps g -> h x K2 for
  // unloop, maps g -> h otherwise. Empty when no pair applies.
  VertexMap alpha;
  VertexMap beta;
};

struct CampaignReport {
  std::string campaign;
  std::size_t instances_run = 0;
  std::size_t agreements = 0;
  std::vector<Mismatch> mismatches;
  std::size_t skips = 0;
  std::map<std::string, std::size_t> skip_reasons;
  std::size_t pairs_checked = 0;
  std::size_t paths_verified = 0;
  double wall_seconds = 0.0;

  /// Order-independent: mismatches are kept sorted by instance id.
  void merge(const CampaignReport& other);
  bool consistent() const {
    return agreements + mismatches.size() + skips == instances_run;
  }
  /// Deterministic text; wall time is not included.
  std::string summary() const;
};

CampaignReport run_campaign(CampaignKind kind, const GeneratorSpec& spec,
                            const CheckOptions& options = {});

CampaignReport campaign_eqtowro(const GeneratorSpec& spec);
CampaignReport campaign_unloop(const GeneratorSpec& spec);
CampaignReport campaign_dismantle(const GeneratorSpec& spec);

}  // namespace hrecol
