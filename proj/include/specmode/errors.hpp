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

#ifndef SPECMODE_ERRORS_HPP
#define SPECMODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specmode {

/// Raised when a computation would exceed its configured work budget
/// (enumeration terms, output configurations, permanent size).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a numerical procedure fails to reach its tolerance, e.g.
/// adaptive quadrature or basis truncation.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specmode

#endif  // SPECMODE_ERRORS_HPP
