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

#include "specmode/spectral_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "specmode/errors.hpp"
#include "specmode/quadrature.hpp"

namespace specmode {
namespace {

constexpr double kSupportWidths = 12.0;
constexpr int kMaxSuggestedBasis = 64;

void check_quadrature(const QuadratureResult& r, const char* what) {
  if (!(r.error_estimate <= kQuadratureFailure)) {
    throw ConvergenceError(std::string(what) + ": quadrature error estimate " +
                           std::to_string(r.error_estimate) + " exceeds 1e-8");
  }
}

QuadratureResult integrate_checked(const std::function<Complex(double)>& f, double lower,
                                   double upper, const char* what) {
  QuadratureOptions options;
  options.absolute_tolerance = kQuadratureTolerance;
  QuadratureResult r = integrate(f, lower, upper, options);
  check_quadrature(r, what);
  return r;
}

// lambda_k for a single k; coefficients do not depend on the basis size.
Complex project_one(const WavepacketSpec& p, const FunctionBasis& basis, int k) {
  const double half = std::max(kSupportWidths * p.bandwidth(), basis.support_half_width());
  const double lower = std::min(p.center_frequency(), basis.center_frequency()) - half;
  const double upper = std::max(p.center_frequency(), basis.center_frequency()) + half;
  auto integrand = [&](double w) { return basis.evaluate(w)[k] * p(w); };
  return integrate_checked(integrand, lower, upper, "decompose").value;
}

}  // namespace

WavepacketSpec::WavepacketSpec(double center_frequency, double bandwidth, double temporal_delay,
                               WavepacketShape shape)
    : shape_(shape), center_(center_frequency), bandwidth_(bandwidth), delay_(temporal_delay) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw std::invalid_argument("wavepacket bandwidth must be positive");
  }
  if (!std::isfinite(center_frequency) || !std::isfinite(temporal_delay)) {
    throw std::invalid_argument("wavepacket parameters must be finite");
  }
  if (center_frequency < 8.0 * bandwidth) {
    throw std::invalid_argument(
        "center_frequency must be at least 8 bandwidths so the spectrum lies in omega > 0");
  }
}

Complex WavepacketSpec::operator()(double omega) const {
  const double x = omega - center_;
  const double envelope = std::pow(2.0 * std::numbers::pi * bandwidth_ * bandwidth_, -0.25) *
                          std::exp(-x * x / (4.0 * bandwidth_ * bandwidth_));
  // exp(-i w tau) split as exp(-i w0 tau) exp(-i x tau) to keep the phase
  // argument small near the centre.
  return envelope * std::polar(1.0, -center_ * delay_) * std::polar(1.0, -x * delay_);
}

FunctionBasis::FunctionBasis(double center_frequency, double scale, int size, BasisFamily family)
    : family_(family), center_(center_frequency), scale_(scale), size_(size) {
  if (size < 1) throw std::invalid_argument("basis size must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("basis scale must be positive");
  }
  if (!std::isfinite(center_frequency)) {
    throw std::invalid_argument("basis center must be finite");
  }
}

Eigen::VectorXd FunctionBasis::evaluate(double omega) const {
  // Hermite functions h_k(x) in x = (w - c) / (sqrt(2) s), so that
  // |xi_0|^2 has standard deviation s; 1/sqrt(sqrt(2) s) restores unit norm.
  const double width = std::numbers::sqrt2 * scale_;
  const double x = (omega - center_) / width;
  Eigen::VectorXd h(size_);
  h[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (size_ > 1) h[1] = std::numbers::sqrt2 * x * h[0];
  for (int k = 1; k + 1 < size_; ++k) {
    h[k + 1] = std::sqrt(2.0 / (k + 1)) * x * h[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * h[k - 1];
  }
  return h / std::sqrt(width);
}

double FunctionBasis::support_half_width() const {
  // Classical turning point of h_{b-1} is sqrt(2b - 1); pad by the Gaussian
  // support factor beyond it.
  return std::numbers::sqrt2 * scale_ * (std::sqrt(2.0 * size_ - 1.0) + kSupportWidths);
}

Complex continuous_overlap(const WavepacketSpec& p, const WavepacketSpec& q) {
  const double half = kSupportWidths * std::max(p.bandwidth(), q.bandwidth());
  const double lower = std::min(p.center_frequency(), q.center_frequency()) - half;
  const double upper = std::max(p.center_frequency(), q.center_frequency()) + half;
  auto integrand = [&](double w) { return std::conj(p(w)) * q(w); };
  return integrate_checked(integrand, lower, upper, "continuous_overlap").value;
}

Decomposition decompose(const WavepacketSpec& p, const FunctionBasis& basis) {
  Eigen::VectorXcd coeffs(basis.size());
  for (int k = 0; k < basis.size(); ++k) coeffs[k] = project_one(p, basis, k);
  const double residual = 1.0 - coeffs.squaredNorm();
  if (residual >= kTruncationThreshold) {
    std::string hint = "no basis size up to " + std::to_string(kMaxSuggestedBasis) + " suffices";
    const FunctionBasis widest(basis.center_frequency(), basis.scale(), kMaxSuggestedBasis,
                               basis.family());
    double mass = coeffs.squaredNorm();
    for (int k = basis.size(); k < kMaxSuggestedBasis; ++k) {
      mass += std::norm(project_one(p, widest, k));
      if (1.0 - mass < kTruncationThreshold) {
        hint = "basis size " + std::to_string(k + 1) + " required";
        break;
      }
    }
    throw ConvergenceError("decompose: truncated mass " + std::to_string(residual) +
                           " >= 1e-6 with basis size " + std::to_string(basis.size()) + "; " +
                           hint);
  }
  return {normalize(coeffs), residual};
}

Eigen::MatrixXd basis_gram(const FunctionBasis& basis) {
  const double half = basis.support_half_width();
  const double lower = basis.center_frequency() - half;
  const double upper = basis.center_frequency() + half;
  const int b = basis.size();
  Eigen::MatrixXd gram(b, b);
  for (int i = 0; i < b; ++i) {
    for (int j = i; j < b; ++j) {
      auto integrand = [&](double w) -> Complex {
        const Eigen::VectorXd xi = basis.evaluate(w);
        return xi[i] * xi[j];
      };
      gram(i, j) = integrate_checked(integrand, lower, upper, "basis_gram").value.real();
      gram(j, i) = gram(i, j);
    }
  }
  return gram;
}

}  // namespace specmode
