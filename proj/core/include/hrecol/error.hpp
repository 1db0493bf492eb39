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

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hrecol {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line` is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An operation was called on inputs outside its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when a host graph contains an induced diamond; carries the
// witness {u, v, x, y} with uv an edge and x, y non-adjacent common neighbours.
class DiamondError : public PreconditionError {
 public:
  DiamondError(const std::string& message, std::array<int, 4> witness)
      : PreconditionError(message), witness_(witness) {}

  const std::array<int, 4>& witness() const noexcept { return witness_; }

 private:
  std::array<int, 4> witness_;
};

// A search ran out of its configured budget. Never a negative answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hrecol
