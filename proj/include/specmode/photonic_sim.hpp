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

#ifndef SPECMODE_PHOTONIC_SIM_HPP
#define SPECMODE_PHOTONIC_SIM_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "specmode/spectral.hpp"

namespace specmode {

/// Tolerance on |U^dagger U - I| per entry.
inline constexpr double kUnitarityTolerance = 1e-9;

inline constexpr std::uint64_t kConfigurationBudget = 10'000'000;
inline constexpr int kMaxSpatialPhotons = 7;
inline constexpr int kMaxEnlargedPhotons = 5;
inline constexpr int kMaxEnlargedBasis = 4;

/// m x m unitary acting on creation operators as a_i^dag -> sum_j U_ij a_j^dag.
class UnitaryMatrix {
 public:
  /// Throws std::invalid_argument if not square, empty, or not unitary.
  explicit UnitaryMatrix(Eigen::MatrixXcd entries);

  static UnitaryMatrix identity(Eigen::Index modes);
  /// 50:50 beamsplitter [[1, 1], [1, -1]] / sqrt(2).
  static UnitaryMatrix beamsplitter();
  /// Maps input mode i to output mode target[i].
  static UnitaryMatrix permutation(std::span<const int> target);

  const Eigen::MatrixXcd& matrix() const { return entries_; }
  int modes() const { return static_cast<int>(entries_.rows()); }

  /// U tensor I_b on the enlarged space; combined index = spatial * b + spectral.
  Eigen::MatrixXcd enlarged(int basis_size) const;

 private:
  Eigen::MatrixXcd entries_;
};

/// Photon counts per mode.
struct OutputConfiguration {
  std::vector<int> counts;

  int modes() const { return static_cast<int>(counts.size()); }
  int photons() const;

  friend auto operator<=>(const OutputConfiguration&, const OutputConfiguration&) = default;
};

/// Photon j in spatial mode j for j < n, vacuum elsewhere.
OutputConfiguration standard_input(int modes, int photons);

/// Full output statistics over every configuration of `photons` in `modes`,
/// in enumerate_configurations order.
struct OutputDistribution {
  int modes = 0;
  int photons = 0;
  std::vector<OutputConfiguration> configurations;
  std::vector<double> probabilities;

  std::size_t size() const { return probabilities.size(); }
  /// Throws std::invalid_argument for a configuration of the wrong shape.
  double probability(const OutputConfiguration& c) const;
  double total() const;
};

/// C(m + n - 1, n), saturating at UINT64_MAX.
std::uint64_t configuration_count(int modes, int photons);

/// Position of `c` in enumerate_configurations(c.modes(), c.photons()).
std::uint64_t configuration_rank(const OutputConfiguration& c);

/// All occupation tuples in lexicographic order with larger leading counts
/// first: (2,0), (1,1), (0,2) for m = n = 2.
/// Throws BudgetError when the count exceeds `budget`.
std::vector<OutputConfiguration> enumerate_configurations(
    int modes, int photons, std::uint64_t budget = kConfigurationBudget);

struct CostEstimate {
  std::uint64_t configurations = 0;  // output configurations visited
  std::uint64_t instances = 1;       // spectral instances or superposition terms
  int permanent_size = 0;
  double permanent_flops = 0.0;      // ~ configurations * instances * 2^k * k
};

CostEstimate estimate_ideal_cost(int modes, int photons);
CostEstimate estimate_enlarged_cost(int modes, int photons, int basis_size);
CostEstimate estimate_mixture_cost(int modes, int photons, int basis_size);

/// Exact output statistics for a Fock input. The amplitude of output S is
/// Per(A_S) / sqrt(prod s_i! prod t_i!) where A_S repeats row i of U s_i
/// times (input occupancy) and column j t_j times (output occupancy).
/// Throws BudgetError for n > 7 or too many configurations.
OutputDistribution output_distribution(const UnitaryMatrix& u, const OutputConfiguration& input);

/// Haar-distributed unitary: QR of a complex Ginibre matrix drawn from
/// CounterRng(seed), with R's diagonal phases folded back into Q.
UnitaryMatrix haar_random_unitary(int modes, std::uint64_t seed);

/// Spatial count statistics for pure photons with spectral structure.
/// Photon j enters spatial mode j in the superposition sum_i lambda_{i,j}
/// a^dag_{j,i}; the evolution is U tensor I_b on the (m * b)-mode space and
/// spectral labels are traced out at the detectors. Pure-state cross-term
/// interference is included exactly. When b > n the amplitudes are first
/// rewritten in an orthonormal basis of their span, which leaves the spatial
/// statistics unchanged.
/// Throws std::invalid_argument for mixed photons or m < n, BudgetError for
/// n > 5, a span wider than 4 or too many enlarged configurations.
OutputDistribution spatial_distribution_pure(const UnitaryMatrix& u,
                                             std::span<const PhotonSource> photons);

/// Spatial statistics for spectrally mixed photons as a classical mixture
/// over instance vectors v: each group of photons sharing a label is a
/// separate ideal Boson-sampling instance through U, and the groups' count
/// distributions are convolved. Group results are cached per photon subset
/// and per label partition.
/// Throws std::invalid_argument for pure photons or m < n, BudgetError as
/// for spatial_distribution_pure.
OutputDistribution spatial_distribution_mixed(const UnitaryMatrix& u,
                                              std::span<const PhotonSource> photons);

/// Independent route to the mixed statistics: the dephased input density
/// operator is diagonal in the enlarged basis, so each term prod_j a^dag_{j,v_j}
/// is evolved by U tensor I_b in the full (m * b)-mode space and weighted by
/// p(v). No label grouping is used.
OutputDistribution spatial_distribution_dephased(const UnitaryMatrix& u,
                                                 std::span<const PhotonSource> photons);

/// Discrete convolution of independent count distributions on the same modes.
OutputDistribution convolve(const OutputDistribution& a, const OutputDistribution& b);

/// max_S |a(S) - b(S)|. Throws std::invalid_argument when shapes differ.
double max_abs_deviation(const OutputDistribution& a, const OutputDistribution& b);

}  // namespace specmode

#endif  // SPECMODE_PHOTONIC_SIM_HPP
