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

#ifndef SPECMODE_QUADRATURE_HPP
#define SPECMODE_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace specmode {

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  int evaluations = 0;
};

struct QuadratureOptions {
  double absolute_tolerance = 1e-10;
  /// Uniform panels before adaptive bisection starts; guards against
  /// oscillatory integrands fooling the first error estimate.
  int initial_panels = 32;
  int max_subdivisions = 20000;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of a complex-valued
/// integrand over [lower, upper]. Never throws on non-convergence; callers
/// inspect error_estimate.
QuadratureResult integrate(const std::function<std::complex<double>(double)>& f, double lower,
                           double upper, const QuadratureOptions& options = {});

}  // namespace specmode

#endif  // SPECMODE_QUADRATURE_HPP
