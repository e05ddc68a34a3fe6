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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "specmode/errors.hpp"
#include "specmode/permanent.hpp"
#include "test_support.hpp"

using namespace specmode;

TEST_CASE("permanent small cases") {
  Eigen::Matrix2cd two;
  two << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(0.5, 0.5);
  CHECK(std::abs(permanent(two) - (two(0, 0) * two(1, 1) + two(0, 1) * two(1, 0))) < 1e-14);

  for (int k = 1; k <= 8; ++k) {
    CHECK(std::abs(permanent(Eigen::MatrixXcd::Identity(k, k)) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(permanent(Eigen::MatrixXd::Ones(k, k)) - std::tgamma(k + 1.0)) < 1e-9);
  }
  CHECK(permanent(Eigen::MatrixXcd(0, 0)) == Complex(1.0));

  Eigen::Matrix3d real;
  real << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  CHECK(permanent(real) == doctest::Approx(450.0));
}

TEST_CASE("permanent errors") {
  CHECK_THROWS_AS(permanent(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(permanent(Eigen::MatrixXcd::Identity(kMaxPermanentSize + 1, kMaxPermanentSize + 1)),
                  BudgetError);
}

TEST_CASE("property: Ryser agrees with the permutation sum") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 64; ++trial) {
    const int k = 1 + trial % 8;
    const Eigen::MatrixXcd a = testing::random_complex_matrix(rng, k);
    const Complex naive = oracle::naive_permanent<Complex>(a);
    CHECK(std::abs(permanent(a) - naive) <= 1e-10 * std::max(1.0, std::abs(naive)));
  }
}

TEST_CASE("permanent of a block expression") {
  std::mt19937_64 rng(8);
  const Eigen::MatrixXcd a = testing::random_complex_matrix(rng, 6);
  const Eigen::MatrixXcd block = a.topLeftCorner(4, 4);
  CHECK(std::abs(permanent(a.topLeftCorner(4, 4)) - permanent(block)) < 1e-12);
  // Row permutations leave the permanent unchanged.
  Eigen::MatrixXcd swapped = block;
  swapped.row(0).swap(swapped.row(3));
  CHECK(std::abs(permanent(swapped) - permanent(block)) < 1e-10);
}
