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

#include "specmode/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace specmode {

SpectralAmplitudes::SpectralAmplitudes(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 1) {
    throw std::invalid_argument("spectral amplitudes need at least one basis function");
  }
  if (!coeffs_.allFinite()) {
    throw std::invalid_argument("spectral amplitudes must be finite");
  }
  const double norm = coeffs_.squaredNorm();
  if (std::abs(norm - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("spectral amplitudes not normalized: sum |lambda|^2 = " +
                                std::to_string(norm));
  }
}

SpectralAmplitudes SpectralAmplitudes::basis_state(Eigen::Index index, Eigen::Index size) {
  if (index < 0 || index >= size) {
    throw std::invalid_argument("basis index out of range");
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(size);
  c[index] = 1.0;
  return SpectralAmplitudes(std::move(c));
}

MixtureWeights::MixtureWeights(Eigen::VectorXd weights) : weights_(std::move(weights)) {
  if (weights_.size() < 1) {
    throw std::invalid_argument("mixture weights need at least one basis function");
  }
  if (!weights_.allFinite() || (weights_.array() < 0.0).any()) {
    throw std::invalid_argument("mixture weights must be finite and non-negative");
  }
  const double total = weights_.sum();
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("mixture weights do not sum to 1: " + std::to_string(total));
  }
}

MixtureWeights MixtureWeights::uniform(Eigen::Index size) {
  if (size < 1) throw std::invalid_argument("mixture size must be positive");
  return MixtureWeights(Eigen::VectorXd::Constant(size, 1.0 / static_cast<double>(size)));
}

MixtureWeights MixtureWeights::basis_state(Eigen::Index index, Eigen::Index size) {
  if (index < 0 || index >= size) {
    throw std::invalid_argument("basis index out of range");
  }
  Eigen::VectorXd w = Eigen::VectorXd::Zero(size);
  w[index] = 1.0;
  return MixtureWeights(std::move(w));
}

Eigen::Index PhotonSource::basis_size() const {
  return is_pure() ? pure().size() : mixed().size();
}

Eigen::VectorXd PhotonSource::label_probabilities() const {
  return is_pure() ? pure().intensities() : mixed().weights();
}

Complex overlap(const SpectralAmplitudes& a, const SpectralAmplitudes& b) {
  const Eigen::Index common = std::min(a.size(), b.size());
  // Entries past the common length pair with implicit zeros.
  return a.coeffs().head(common).dot(b.coeffs().head(common));
}

double fidelity(const SpectralAmplitudes& a, const SpectralAmplitudes& b) {
  return std::norm(overlap(a, b));
}

double purity(const MixtureWeights& w) { return w.weights().squaredNorm(); }

SpectralAmplitudes normalize(const Eigen::VectorXcd& coeffs) {
  const double norm = coeffs.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero-norm (degenerate) photon");
  }
  return SpectralAmplitudes(coeffs / norm);
}

}  // namespace specmode
