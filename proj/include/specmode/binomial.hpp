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

#ifndef SPECMODE_BINOMIAL_HPP
#define SPECMODE_BINOMIAL_HPP

#include <cstdint>

namespace specmode {

/// log C(n, k); -inf outside 0 <= k <= n.
double log_binomial_coefficient(int n, int k);

/// Exact C(n, k) saturated at UINT64_MAX.
std::uint64_t binomial_coefficient(int n, int k);

/// P(X >= k_min) for X ~ Binomial(n, p), summed in log space with
/// compensated accumulation. Valid for n up to 1e4 and beyond.
/// Returns 1 for k_min <= 0 and 0 for k_min > n.
double binomial_upper_tail(int n, int k_min, double p);

}  // namespace specmode

#endif  // SPECMODE_BINOMIAL_HPP
