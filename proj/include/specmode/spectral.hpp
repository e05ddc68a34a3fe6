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

#ifndef SPECMODE_SPECTRAL_HPP
#define SPECMODE_SPECTRAL_HPP

#include <complex>
#include <variant>

#include <Eigen/Dense>

namespace specmode {

using Complex = std::complex<double>;

/// Tolerance on sum(|lambda_i|^2) = 1 and sum(gamma_i) = 1 at construction.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Amplitudes of a pure photon over an abstract orthonormal spectral basis.
///
/// The basis is an index set only; functions xi_i(omega) are never
/// evaluated here. Indices past size() behave as zero amplitude, which is
/// equivalent to appending unused orthonormal basis functions.
class SpectralAmplitudes {
 public:
  /// Throws std::invalid_argument when empty or not normalized to 1e-9.
  explicit SpectralAmplitudes(Eigen::VectorXcd coeffs);

  /// Unit amplitude on `index` in a basis of `size` functions.
  static SpectralAmplitudes basis_state(Eigen::Index index, Eigen::Index size);

  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  Eigen::Index size() const { return coeffs_.size(); }

  Complex operator[](Eigen::Index i) const {
    return i < coeffs_.size() ? coeffs_[i] : Complex{};
  }

  /// |lambda_i|^2 per index.
  Eigen::VectorXd intensities() const { return coeffs_.cwiseAbs2(); }

  friend bool operator==(const SpectralAmplitudes& a, const SpectralAmplitudes& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  Eigen::VectorXcd coeffs_;
};

/// Diagonal mixture weights gamma_i of a spectrally mixed photon.
class MixtureWeights {
 public:
  /// Throws std::invalid_argument when empty, negative, or not summing to 1.
  explicit MixtureWeights(Eigen::VectorXd weights);

  static MixtureWeights uniform(Eigen::Index size);
  static MixtureWeights basis_state(Eigen::Index index, Eigen::Index size);

  const Eigen::VectorXd& weights() const { return weights_; }
  Eigen::Index size() const { return weights_.size(); }

  double operator[](Eigen::Index i) const {
    return i < weights_.size() ? weights_[i] : 0.0;
  }

  friend bool operator==(const MixtureWeights& a, const MixtureWeights& b) {
    return a.weights_ == b.weights_;
  }

 private:
  Eigen::VectorXd weights_;
};

/// Either a pure photon (amplitudes) or a diagonal spectral mixture.
class PhotonSource {
 public:
  PhotonSource(SpectralAmplitudes amplitudes) : state_(std::move(amplitudes)) {}  // NOLINT
  PhotonSource(MixtureWeights weights) : state_(std::move(weights)) {}            // NOLINT

  bool is_pure() const { return std::holds_alternative<SpectralAmplitudes>(state_); }
  bool is_mixed() const { return !is_pure(); }

  /// Throws std::bad_variant_access on the wrong alternative.
  const SpectralAmplitudes& pure() const { return std::get<SpectralAmplitudes>(state_); }
  const MixtureWeights& mixed() const { return std::get<MixtureWeights>(state_); }

  Eigen::Index basis_size() const;

  /// Probability of finding the photon in each basis function: |lambda_i|^2
  /// for pure photons, gamma_i for mixtures.
  Eigen::VectorXd label_probabilities() const;

  friend bool operator==(const PhotonSource&, const PhotonSource&) = default;

 private:
  std::variant<SpectralAmplitudes, MixtureWeights> state_;
};

/// sum_i conj(a_i) b_i, zero-padding the shorter vector.
Complex overlap(const SpectralAmplitudes& a, const SpectralAmplitudes& b);

/// |overlap(a, b)|^2.
double fidelity(const SpectralAmplitudes& a, const SpectralAmplitudes& b);

/// tr(rho^2) = sum_i gamma_i^2 for a diagonal mixture.
double purity(const MixtureWeights& w);

/// Rescales to unit norm. Throws std::invalid_argument on a zero vector.
SpectralAmplitudes normalize(const Eigen::VectorXcd& coeffs);

}  // namespace specmode

#endif  // SPECMODE_SPECTRAL_HPP
