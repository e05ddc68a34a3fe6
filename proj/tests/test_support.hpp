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

#ifndef SPECMODE_TEST_SUPPORT_HPP
#define SPECMODE_TEST_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "specmode/spectral.hpp"

namespace specmode::testing {

inline Eigen::VectorXcd random_complex_vector(std::mt19937_64& rng, Eigen::Index size) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(size);
  for (Eigen::Index i = 0; i < size; ++i) v[i] = {normal(rng), normal(rng)};
  return v;
}

inline SpectralAmplitudes random_amplitudes(std::mt19937_64& rng, Eigen::Index size) {
  return normalize(random_complex_vector(rng, size));
}

/// Random point on the simplex; `sparsity` zeroes entries with that probability
/// (keeping at least one).
inline MixtureWeights random_weights(std::mt19937_64& rng, Eigen::Index size, double sparsity = 0.0) {
  std::exponential_distribution<double> expo;
  std::bernoulli_distribution drop(sparsity);
  Eigen::VectorXd w(size);
  for (Eigen::Index i = 0; i < size; ++i) w[i] = drop(rng) ? 0.0 : expo(rng);
  if (w.sum() == 0.0) w[0] = 1.0;
  return MixtureWeights(w / w.sum());
}

inline Eigen::MatrixXcd random_complex_matrix(std::mt19937_64& rng, Eigen::Index k) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd m(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = {normal(rng), normal(rng)};
  }
  return m;
}

}  // namespace specmode::testing

#endif  // SPECMODE_TEST_SUPPORT_HPP
