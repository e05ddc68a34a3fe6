// Copyright 2026 The specmode Authors
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

#ifndef SPECMODE_CLI_HPP
#define SPECMODE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace specmode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitBudgetError = 3;

/// Runs `specmode <group> <verb> [flags]` with groups phard, figure and
/// simulate. Reports go to `out` unless --out names a file, which is then
/// replaced atomically. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Closed grid min, min + h, ..., max with h = (max - min) / steps.
std::vector<double> linear_grid(double min, double max, int steps);

/// One CSV row per line; throws std::invalid_argument if any row has a
/// different column count than the header.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace specmode::cli

#endif  // SPECMODE_CLI_HPP
