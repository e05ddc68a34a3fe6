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

#ifndef SPECMODE_HARDNESS_HPP
#define SPECMODE_HARDNESS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "specmode/spectral.hpp"

namespace specmode {

/// Fixed caveat attached to every hardness report: a large p_hard is a
/// necessary condition for classical hardness, never a proof of it.
inline constexpr std::string_view kHardnessDisclaimer =
    "p_hard > epsilon is a necessary but not sufficient condition for hardness: "
    "instances counted as hard are not provably hard and interference between "
    "pure-state terms is not accounted for";

/// Assignment of each photon to a spectral basis index.
class InstanceVector {
 public:
  /// Throws std::invalid_argument when empty or any label is negative.
  explicit InstanceVector(std::vector<int> labels);

  const std::vector<int>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int operator[](int j) const { return labels_[static_cast<std::size_t>(j)]; }

 private:
  std::vector<int> labels_;
};

/// Photons plus the hardness threshold and the epsilon of p_hard > epsilon.
class HardnessQuery {
 public:
  /// Throws std::invalid_argument if photons is empty, mixes pure and mixed
  /// sources, n_hard < 1, or epsilon is outside (0, 1).
  HardnessQuery(std::vector<PhotonSource> photons, int n_hard, double epsilon);

  const std::vector<PhotonSource>& photons() const { return photons_; }
  int n() const { return static_cast<int>(photons_.size()); }
  int n_hard() const { return n_hard_; }
  double epsilon() const { return epsilon_; }
  bool is_pure() const { return photons_.front().is_pure(); }
  /// Largest per-photon basis size; shorter photons are zero-padded.
  int basis_size() const;

 private:
  std::vector<PhotonSource> photons_;
  int n_hard_;
  double epsilon_;
};

enum class HardnessMethod { ExactEnumeration, ClosedFormIID, MonteCarlo };

std::string_view to_string(HardnessMethod method);
/// Throws std::invalid_argument for unknown names.
HardnessMethod hardness_method_from_string(std::string_view name);

struct HardnessResult {
  double p_hard = 0.0;
  HardnessMethod method = HardnessMethod::ExactEnumeration;
  std::optional<double> std_error;    // Monte-Carlo only
  std::optional<std::uint64_t> seed;  // Monte-Carlo only
  std::optional<std::uint64_t> terms;  // instance vectors or samples visited

  bool exceeds(double epsilon) const { return p_hard > epsilon; }
};

/// Largest multiplicity of any single label.
int max_repetition(const InstanceVector& v);

/// prod_j gamma_{v_j, j} (mixed) or |prod_j lambda_{v_j, j}|^2 (pure).
/// Throws std::invalid_argument if v.size() != q.n() or a label is >= the
/// query's basis size.
double instance_probability(const HardnessQuery& q, const InstanceVector& v);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct EnumerationOptions {
  /// Maximum instance vectors visited. Labels with zero probability for a
  /// photon are skipped, so the count is the product of support sizes.
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 0;
};

/// Sum of instance_probability over all v with max_repetition(v) >= n_hard.
/// Vectors are visited in odometer order (last photon fastest) in fixed-size
/// chunks whose compensated partial sums are combined in chunk order, so the
/// result is identical for any thread count. Throws BudgetError when the
/// enumeration exceeds options.budget.
HardnessResult p_hard_exact(const HardnessQuery& q, const EnumerationOptions& options = {});

/// Closed form for n identical mixed photons:
/// p_hard = 1 - P(every label count < n_hard), with the occupancy probability
/// obtained by convolving truncated exponential generating functions label by
/// label in log space. Throws std::invalid_argument if weights.size() != b or
/// n is outside [1, 1e4].
HardnessResult p_hard_iid_exact(int b, int n, int n_hard, const MixtureWeights& weights);

/// Fraction of sampled instance vectors with max_repetition >= n_hard. Each
/// photon's label is drawn independently by inverse CDF from its label
/// probabilities, using CounterRng(seed) at counter sample * n + photon.
/// Throws std::invalid_argument when samples == 0.
HardnessResult p_hard_monte_carlo(const HardnessQuery& q, std::uint64_t samples,
                                  std::uint64_t seed, unsigned threads = 0);

struct TailBound {
  double value = 0.0;
  /// Set when n_hard > n; value is then 0.
  bool n_hard_exceeds_n = false;
};

/// sum_{k >= n_hard} C(n, k) P^k (1 - P)^(n - k): lower bound on p_hard for
/// identical, maximally mixed photons of purity P. P = 0 is accepted as the
/// limit of the formula so grids can start at zero.
/// Throws std::invalid_argument for P outside [0, 1] or n < 1.
TailBound p_hard_lower_bound_mixed(double purity, int n, int n_hard);

/// The same tail in F_min: lower bound on p_hard for pure photons whose
/// worst-case construction puts weight F_min on a shared basis function.
/// Throws std::invalid_argument for F_min outside [0, 1] or n < 1.
TailBound p_hard_lower_bound_fidelity(double f_min, int n, int n_hard);

struct RegionRow {
  double f_min;
  double lower_bound;
  bool in_region;  // lower_bound > epsilon
};

/// Evaluates lower_bound(F_min) <= p_hard <= 1 on a grid and flags points
/// where the lower bound clears epsilon. Throws std::invalid_argument when
/// n_hard >= n (the upper bound of 1 is only established for n_hard < n).
std::vector<RegionRow> inequality_region(std::span<const double> f_min_grid, int n, int n_hard,
                                         double epsilon);

/// F_min at which the fidelity lower bound equals epsilon, by bisection to
/// 1e-14. Points above it are in the region. Same preconditions as
/// inequality_region.
double fidelity_threshold(int n, int n_hard, double epsilon);

/// n photons over n + 1 basis functions: photon i has amplitude sqrt(F_min)
/// on shared index 0 and sqrt(1 - F_min) on private index i + 1. Every pair
/// has overlap F_min (fidelity F_min^2), and p_hard_exact on these sources
/// equals p_hard_lower_bound_fidelity exactly.
std::vector<PhotonSource> worst_case_pure_sources(double f_min, int n);

/// Photons 2..n are xi_0; photon 1 is (sqrt(F_min), sqrt(1 - F_min)), so its
/// fidelity with every other photon is F_min.
std::vector<PhotonSource> best_case_pure_sources(double f_min, int n);

/// n identical pure photons in xi_0.
std::vector<PhotonSource> identical_pure_sources(int n);

/// Photon j entirely in xi_j.
std::vector<PhotonSource> distinguishable_pure_sources(int n);

/// n copies of the same mixture.
std::vector<PhotonSource> iid_mixed_sources(const MixtureWeights& weights, int n);

}  // namespace specmode

#endif  // SPECMODE_HARDNESS_HPP
