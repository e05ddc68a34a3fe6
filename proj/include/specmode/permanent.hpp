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

#ifndef SPECMODE_PERMANENT_HPP
#define SPECMODE_PERMANENT_HPP

#include <bit>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "specmode/errors.hpp"

namespace specmode {

/// Largest matrix dimension accepted by permanent().
inline constexpr Eigen::Index kMaxPermanentSize = 16;

/// Matrix permanent by Ryser's inclusion-exclusion formula with Gray-code
/// ordering of column subsets: one column is added or removed per step, so
/// the row sums update in O(k) and the total cost is O(2^k k).
///
///   Per(A) = (-1)^k sum_{S subset cols} (-1)^|S| prod_i sum_{j in S} a_ij
///
/// Works for any scalar type. The 0x0 permanent is 1. Throws BudgetError for
/// k > 16 and std::invalid_argument for non-square input.
template <typename Derived>
typename Derived::Scalar permanent(const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index k = matrix.rows();
  if (matrix.cols() != k) throw std::invalid_argument("permanent needs a square matrix");
  if (k > kMaxPermanentSize) {
    throw BudgetError("permanent of size " + std::to_string(k) + " exceeds the limit of " +
                      std::to_string(kMaxPermanentSize));
  }
  if (k == 0) return Scalar(1);

  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = matrix;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row_sums = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(k);
  Scalar total(0);
  std::uint32_t gray = 0;
  const std::uint32_t steps = std::uint32_t{1} << k;
  for (std::uint32_t step = 1; step < steps; ++step) {
    const int column = std::countr_zero(step);
    const std::uint32_t bit = std::uint32_t{1} << column;
    gray ^= bit;
    if (gray & bit) {
      row_sums += a.col(column);
    } else {
      row_sums -= a.col(column);
    }
    const Scalar product = row_sums.prod();
    if (std::popcount(gray) % 2 == 1) {
      total -= product;
    } else {
      total += product;
    }
  }
  return (k % 2 == 1) ? Scalar(-total) : total;
}

}  // namespace specmode

#endif  // SPECMODE_PERMANENT_HPP
