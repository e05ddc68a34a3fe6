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

#include "specmode/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "specmode/summation.hpp"

namespace specmode {

double log_binomial_coefficient(int n, int k) {
  if (k < 0 || n < 0 || k > n) return -std::numeric_limits<double>::infinity();
  if (k == 0 || k == n) return 0.0;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::uint64_t binomial_coefficient(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (int i = 1; i <= k; ++i) {
    // C(n-k+i, i) = C(n-k+i-1, i-1) * (n-k+i) / i, exact at every step.
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

double binomial_upper_tail(int n, int k_min, double p) {
  if (n < 0) throw std::invalid_argument("binomial tail needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial tail needs p in [0, 1]");
  k_min = std::max(k_min, 0);
  if (k_min == 0) return 1.0;
  if (k_min > n) return 0.0;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;

  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  // Sum whichever side excludes the mean, so the accumulated terms are small
  // and a tail close to 1 is formed as 1 - (small lower tail).
  const bool upper_side = k_min > n * p;
  const int first = upper_side ? k_min : 0;
  const int last = upper_side ? n : k_min - 1;
  std::vector<double> log_terms;
  log_terms.reserve(static_cast<std::size_t>(last - first + 1));
  double peak = -std::numeric_limits<double>::infinity();
  for (int k = first; k <= last; ++k) {
    const double t = log_binomial_coefficient(n, k) + k * log_p + (n - k) * log_q;
    log_terms.push_back(t);
    peak = std::max(peak, t);
  }
  CompensatedSum sum;
  for (double t : log_terms) sum.add(std::exp(t - peak));
  const double side = std::exp(peak) * sum.value();
  return std::clamp(upper_side ? side : 1.0 - side, 0.0, 1.0);
}

}  // namespace specmode
