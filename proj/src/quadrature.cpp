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

#include "specmode/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace specmode {
namespace {

// Kronrod nodes on [0, 1] of the symmetric 15-point rule; odd indices are
// the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lower;
  double upper;
  std::complex<double> value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod_panel(const std::function<std::complex<double>(double)>& f, double lower,
                    double upper) {
  const double center = 0.5 * (lower + upper);
  const double half = 0.5 * (upper - lower);
  std::complex<double> kronrod{};
  std::complex<double> gauss{};
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const std::complex<double> pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  const std::complex<double> mid = f(center);
  kronrod += kKronrodWeights[7] * mid;
  gauss += kGaussWeights[3] * mid;
  return {lower, upper, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<std::complex<double>(double)>& f, double lower,
                           double upper, const QuadratureOptions& options) {
  QuadratureResult result;
  if (upper == lower) return result;

  std::priority_queue<Panel> panels;
  const int initial = std::max(1, options.initial_panels);
  const double width = (upper - lower) / initial;
  for (int i = 0; i < initial; ++i) {
    const double a = lower + i * width;
    const double b = (i + 1 == initial) ? upper : lower + (i + 1) * width;
    panels.push(kronrod_panel(f, a, b));
    result.evaluations += 15;
  }

  auto total_error = [&panels] {
    // priority_queue has no iteration; copy is cheap at these sizes.
    auto copy = panels;
    double err = 0.0;
    while (!copy.empty()) {
      err += copy.top().error;
      copy.pop();
    }
    return err;
  };

  double error = total_error();
  int subdivisions = 0;
  while (error > options.absolute_tolerance && subdivisions < options.max_subdivisions) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lower + worst.upper);
    if (mid <= worst.lower || mid >= worst.upper) {
      panels.push(worst);  // cannot split further in double precision
      break;
    }
    const Panel left = kronrod_panel(f, worst.lower, mid);
    const Panel right = kronrod_panel(f, mid, worst.upper);
    panels.push(left);
    panels.push(right);
    result.evaluations += 30;
    error += left.error + right.error - worst.error;
    ++subdivisions;
    if (subdivisions % 64 == 0) error = total_error();  // resync running sum
  }

  // Sum in panel position order so the value does not depend on heap layout.
  std::vector<Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Panel& a, const Panel& b) { return a.lower < b.lower; });
  double err = 0.0;
  for (const Panel& p : all) {
    result.value += p.value;
    err += p.error;
  }
  result.error_estimate = err;
  return result;
}

}  // namespace specmode
