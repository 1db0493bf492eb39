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
#include <optional>

#include "hrecol/hom.hpp"

namespace hrecol {

struct SolverOptions {
  // Maximum number of distinct homomorphisms the search may visit.
  std::size_t state_budget = 1'000'000;
};

struct ReachResult {
  bool reachable = false;
  std::optional<RecoloringPath> path;  // shortest, when reachable
  std::size_t states_visited = 0;
};

/// Breadth-first search over Col(g, h) from alpha, generating moves with
/// vertices ascending and colours ascending. Returns a shortest path when
/// beta is reachable.
///
/// Throws PreconditionError for invalid instances and BudgetExceeded when the
/// search visits more than `state_budget` states; running out of budget is
/// never reported as unreachable.
ReachResult reachable(const Instance& instance, const SolverOptions& options = {});

}  // namespace hrecol
