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

#ifndef SPECMODE_SPECTRAL_FUNCTIONS_HPP
#define SPECMODE_SPECTRAL_FUNCTIONS_HPP

#include <complex>

#include <Eigen/Dense>

#include "specmode/spectral.hpp"

namespace specmode {

enum class WavepacketShape { Gaussian };
enum class BasisFamily { HermiteGauss };

/// Continuous single-photon spectrum psi(omega).
///
/// Gaussian: psi(w) = (2 pi s^2)^(-1/4) exp(-(w - w0)^2 / (4 s^2)) exp(-i w tau),
/// so |psi|^2 is a normal density with standard deviation s = bandwidth.
/// The delay tau enters as a linear spectral phase.
class WavepacketSpec {
 public:
  /// Throws std::invalid_argument unless bandwidth > 0 and
  /// center_frequency >= 8 * bandwidth (negative-frequency tail negligible).
  WavepacketSpec(double center_frequency, double bandwidth, double temporal_delay = 0.0,
                 WavepacketShape shape = WavepacketShape::Gaussian);

  WavepacketShape shape() const { return shape_; }
  double center_frequency() const { return center_; }
  double bandwidth() const { return bandwidth_; }
  double temporal_delay() const { return delay_; }

  Complex operator()(double omega) const;

 private:
  WavepacketShape shape_;
  double center_;
  double bandwidth_;
  double delay_;
};

/// Orthonormal Hermite-Gauss functions xi_k centred at `center_frequency`.
///
/// `scale` is the intensity standard deviation of xi_0, so a Gaussian
/// WavepacketSpec with bandwidth == scale and the same centre equals xi_0.
class FunctionBasis {
 public:
  /// Throws std::invalid_argument unless size >= 1 and scale > 0.
  FunctionBasis(double center_frequency, double scale, int size,
                BasisFamily family = BasisFamily::HermiteGauss);

  BasisFamily family() const { return family_; }
  double center_frequency() const { return center_; }
  double scale() const { return scale_; }
  int size() const { return size_; }

  /// All basis functions xi_0..xi_{size-1} at omega (real-valued family).
  Eigen::VectorXd evaluate(double omega) const;

  /// Half-width of the region holding all basis functions' mass.
  double support_half_width() const;

 private:
  BasisFamily family_;
  double center_;
  double scale_;
  int size_;
};

/// Absolute tolerance handed to each adaptive integral.
inline constexpr double kQuadratureTolerance = 1e-10;
/// Estimated quadrature error above which a result is rejected.
inline constexpr double kQuadratureFailure = 1e-8;
/// Largest tolerated truncated mass 1 - sum |lambda_i|^2.
inline constexpr double kTruncationThreshold = 1e-6;

/// integral conj(psi_p) psi_q over the combined support.
/// Throws ConvergenceError when the error estimate exceeds 1e-8.
Complex continuous_overlap(const WavepacketSpec& p, const WavepacketSpec& q);

struct Decomposition {
  SpectralAmplitudes amplitudes;
  /// 1 - sum |lambda_i|^2 before renormalization.
  double residual;
};

/// Projects psi onto the basis: lambda_i = integral xi_i(w)^* psi(w) dw.
/// Throws ConvergenceError if the residual is >= 1e-6; the message names the
/// smallest basis size that would succeed when one exists below 64.
Decomposition decompose(const WavepacketSpec& p, const FunctionBasis& basis);

/// Pairwise inner products of the basis functions by quadrature.
Eigen::MatrixXd basis_gram(const FunctionBasis& basis);

}  // namespace specmode

#endif  // SPECMODE_SPECTRAL_FUNCTIONS_HPP
