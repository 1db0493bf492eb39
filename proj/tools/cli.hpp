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
#include <vector>

namespace hrecol::cli {

// Exit codes.
inline constexpr int kOk = 0;           // success, or a reachable instance
inline constexpr int kNo = 1;           // unreachable, invalid path, or mismatches found
inline constexpr int kInputError = 2;   // unreadable or invalid input
inline constexpr int kBudget = 3;       // a search ran out of budget

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrecol::cli
