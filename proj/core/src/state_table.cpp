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

#include "hrecol/detail/state_table.hpp"

#include <algorithm>

#include "hrecol/error.hpp"

namespace hrecol::detail {

StateTable::StateTable(std::size_t width) : width_(width), slots_(1024, 0) {}

std::uint64_t StateTable::hash(std::span<const Vertex> state) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (Vertex v : state) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  // splitmix64 finaliser
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

bool StateTable::equal(std::size_t index, std::span<const Vertex> state) const {
  return std::equal(state.begin(), state.end(), arena_.begin() + static_cast<std::ptrdiff_t>(index * width_));
}

std::optional<std::size_t> StateTable::find(std::span<const Vertex> state) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t slot = hash(state) & mask;; slot = (slot + 1) & mask) {
    const std::uint32_t entry = slots_[slot];
    if (entry == 0) return std::nullopt;
    if (equal(entry - 1, state)) return entry - 1;
  }
}

std::pair<std::size_t, bool> StateTable::insert(std::span<const Vertex> state) {
  if ((count_ + 1) * 2 > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t slot = hash(state) & mask;; slot = (slot + 1) & mask) {
    const std::uint32_t entry = slots_[slot];
    if (entry == 0) {
      if (count_ >= 0xfffffffeULL) throw BudgetExceeded("state table full");
      slots_[slot] = static_cast<std::uint32_t>(count_ + 1);
      arena_.insert(arena_.end(), state.begin(), state.end());
      return {count_++, true};
    }
    if (equal(entry - 1, state)) return {entry - 1, false};
  }
}

void StateTable::grow() {
  std::vector<std::uint32_t> old = std::move(slots_);
  slots_.assign(old.size() * 2, 0);
  const std::size_t mask = slots_.size() - 1;
  for (std::uint32_t entry : old) {
    if (entry == 0) continue;
    std::size_t slot = hash((*this)[entry - 1]) & mask;
    while (slots_[slot] != 0) slot = (slot + 1) & mask;
    slots_[slot] = entry;
  }
}

}  // namespace hrecol::detail
