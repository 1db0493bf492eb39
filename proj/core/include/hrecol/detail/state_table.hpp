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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hrecol/graph.hpp"

namespace hrecol::detail {

/// Interns fixed-width vertex maps, assigning dense indices in insertion order.
/// Maps live contiguously in one arena; lookup is open addressing.
class StateTable {
 public:
  explicit StateTable(std::size_t width);

  // Returns (index, inserted).
  std::pair<std::size_t, bool> insert(std::span<const Vertex> state);
  std::optional<std::size_t> find(std::span<const Vertex> state) const;

  std::span<const Vertex> operator[](std::size_t index) const {
    return {arena_.data() + index * width_, width_};
  }
  std::size_t size() const noexcept { return count_; }
  std::size_t width() const noexcept { return width_; }

 private:
  std::uint64_t hash(std::span<const Vertex> state) const;
  bool equal(std::size_t index, std::span<const Vertex> state) const;
  void grow();

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Vertex> arena_;
  std::vector<std::uint32_t> slots_;  // index + 1; 0 marks an empty slot
};

}  // namespace hrecol::detail
