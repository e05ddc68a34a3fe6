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

#include "specmode/photonic_sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "specmode/binomial.hpp"
#include "specmode/errors.hpp"
#include "specmode/parallel.hpp"
#include "specmode/permanent.hpp"
#include "specmode/rng.hpp"

namespace specmode {
namespace {

constexpr std::size_t kConfigurationChunk = 256;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Mode index repeated once per photon, e.g. (2,0,1) -> {0,0,2}.
std::vector<int> expand(const OutputConfiguration& c) {
  std::vector<int> out;
  for (int mode = 0; mode < c.modes(); ++mode) {
    for (int k = 0; k < c.counts[static_cast<std::size_t>(mode)]; ++k) out.push_back(mode);
  }
  return out;
}

double occupancy_norm(const OutputConfiguration& c) {
  double norm = 1.0;
  for (int count : c.counts) norm *= factorial(count);
  return norm;
}

void check_budget(std::uint64_t configurations, const char* what) {
  if (configurations > kConfigurationBudget) {
    throw BudgetError(std::string(what) + ": " + std::to_string(configurations) +
                      " output configurations exceed the budget of " +
                      std::to_string(kConfigurationBudget));
  }
}

OutputDistribution empty_distribution(int modes, int photons) {
  OutputDistribution d;
  d.modes = modes;
  d.photons = photons;
  d.configurations = enumerate_configurations(modes, photons);
  d.probabilities.assign(d.configurations.size(), 0.0);
  return d;
}

int basis_size_of(std::span<const PhotonSource> photons) {
  Eigen::Index b = 0;
  for (const PhotonSource& p : photons) b = std::max(b, p.basis_size());
  return static_cast<int>(b);
}

void check_photons(const UnitaryMatrix& u, std::span<const PhotonSource> photons, bool pure,
                   const char* what) {
  const int n = static_cast<int>(photons.size());
  if (n < 1) throw std::invalid_argument(std::string(what) + ": need at least one photon");
  if (n > u.modes()) throw std::invalid_argument(std::string(what) + ": more photons than modes");
  for (const PhotonSource& p : photons) {
    if (p.is_pure() != pure) {
      throw std::invalid_argument(std::string(what) + (pure ? ": photons must be pure"
                                                            : ": photons must be mixed"));
    }
  }
  if (n > kMaxEnlargedPhotons) {
    throw BudgetError(std::string(what) + ": at most " + std::to_string(kMaxEnlargedPhotons) +
                      " photons supported");
  }
}

void check_basis(std::span<const PhotonSource> photons, const char* what) {
  if (basis_size_of(photons) > kMaxEnlargedBasis) {
    throw BudgetError(std::string(what) + ": spectral basis larger than " +
                      std::to_string(kMaxEnlargedBasis));
  }
}

// Spatial statistics of pure photons only see their spectral Gram matrix, so
// the amplitudes can be re-expressed in an orthonormal basis of their span.
// Leaves the photons alone when b <= n.
std::vector<PhotonSource> compress_spectra(std::span<const PhotonSource> photons) {
  const Eigen::Index n = static_cast<Eigen::Index>(photons.size());
  const Eigen::Index b = basis_size_of(photons);
  if (b <= n) return {photons.begin(), photons.end()};
  Eigen::MatrixXcd lambda = Eigen::MatrixXcd::Zero(b, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::VectorXcd& c = photons[static_cast<std::size_t>(j)].pure().coeffs();
    lambda.col(j).head(c.size()) = c;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(lambda);
  qr.setThreshold(1e-12);
  const Eigen::Index r = std::max<Eigen::Index>(qr.rank(), 1);
  const Eigen::MatrixXcd q = Eigen::MatrixXcd(qr.householderQ()).leftCols(r);
  const Eigen::MatrixXcd reduced = q.adjoint() * lambda;
  std::vector<PhotonSource> out;
  for (Eigen::Index j = 0; j < n; ++j) out.emplace_back(normalize(reduced.col(j)));
  return out;
}

// Probabilities of every enlarged-space configuration for single photons
// whose creation vectors over the enlarged output modes are the columns of
// `columns` (rows = enlarged modes, cols = photons).
std::vector<double> single_photon_statistics(const Eigen::MatrixXcd& columns,
                                             const std::vector<OutputConfiguration>& outputs) {
  const Eigen::Index n = columns.cols();
  std::vector<double> probs(outputs.size());
  const std::size_t chunks = (outputs.size() + kConfigurationChunk - 1) / kConfigurationChunk;
  parallel_chunks(chunks, [&](std::size_t chunk) {
    Eigen::MatrixXcd a(n, n);
    const std::size_t end = std::min(outputs.size(), (chunk + 1) * kConfigurationChunk);
    for (std::size_t s = chunk * kConfigurationChunk; s < end; ++s) {
      const std::vector<int> rows = expand(outputs[s]);
      for (Eigen::Index r = 0; r < n; ++r) a.row(r) = columns.row(rows[static_cast<std::size_t>(r)]);
      probs[s] = std::norm(permanent(a)) / occupancy_norm(outputs[s]);
    }
  });
  return probs;
}

// Pure photons -> spatial marginal via the enlarged space.
OutputDistribution enlarged_marginal(const UnitaryMatrix& u, std::span<const PhotonSource> photons,
                                     int b) {
  const int m = u.modes();
  const int n = static_cast<int>(photons.size());
  check_budget(configuration_count(m * b, n), "enlarged-space simulation");

  // Photon j: a^dag_{j,i} -> sum_k U_jk a^dag_{k,i}, weighted by lambda_{i,j}.
  Eigen::MatrixXcd columns = Eigen::MatrixXcd::Zero(m * b, n);
  for (int j = 0; j < n; ++j) {
    const SpectralAmplitudes& amp = photons[static_cast<std::size_t>(j)].pure();
    for (int k = 0; k < m; ++k) {
      for (int i = 0; i < b; ++i) columns(k * b + i, j) = u.matrix()(j, k) * amp[i];
    }
  }
  const std::vector<OutputConfiguration> enlarged = enumerate_configurations(m * b, n);
  const std::vector<double> probs = single_photon_statistics(columns, enlarged);

  OutputDistribution out = empty_distribution(m, n);
  OutputConfiguration spatial{std::vector<int>(static_cast<std::size_t>(m))};
  for (std::size_t t = 0; t < enlarged.size(); ++t) {
    for (int k = 0; k < m; ++k) {
      int total = 0;
      for (int i = 0; i < b; ++i) total += enlarged[t].counts[static_cast<std::size_t>(k * b + i)];
      spatial.counts[static_cast<std::size_t>(k)] = total;
    }
    out.probabilities[configuration_rank(spatial)] += probs[t];
  }
  return out;
}

// Calls visit(labels, probability) for every instance vector with nonzero
// probability, in odometer order.
template <typename Visit>
void for_each_instance(std::span<const PhotonSource> photons, Visit&& visit) {
  const std::size_t n = photons.size();
  std::vector<std::vector<int>> labels(n);
  std::vector<std::vector<double>> weights(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Eigen::VectorXd p = photons[j].label_probabilities();
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p[i] > 0.0) {
        labels[j].push_back(static_cast<int>(i));
        weights[j].push_back(p[i]);
      }
    }
  }
  std::vector<std::size_t> digit(n, 0);
  std::vector<int> v(n);
  while (true) {
    double p = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = labels[j][digit[j]];
      p *= weights[j][digit[j]];
    }
    visit(v, p);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++digit[j] < labels[j].size()) break;
      digit[j] = 0;
      if (j == 0) return;
    }
  }
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("unitary must be a non-empty square matrix");
  }
  const Eigen::MatrixXcd defect =
      entries_.adjoint() * entries_ - Eigen::MatrixXcd::Identity(entries_.rows(), entries_.cols());
  if (!entries_.allFinite() || defect.cwiseAbs().maxCoeff() > kUnitarityTolerance) {
    throw std::invalid_argument("matrix is not unitary within 1e-9");
  }
}

UnitaryMatrix UnitaryMatrix::identity(Eigen::Index modes) {
  return UnitaryMatrix(Eigen::MatrixXcd::Identity(modes, modes));
}

UnitaryMatrix UnitaryMatrix::beamsplitter() {
  Eigen::MatrixXcd h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return UnitaryMatrix(h / std::sqrt(2.0));
}

UnitaryMatrix UnitaryMatrix::permutation(std::span<const int> target) {
  const auto m = static_cast<Eigen::Index>(target.size());
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const int t = target[static_cast<std::size_t>(i)];
    if (t < 0 || t >= m) throw std::invalid_argument("permutation target out of range");
    p(i, t) = 1.0;
  }
  return UnitaryMatrix(std::move(p));  // rejects repeated targets
}

Eigen::MatrixXcd UnitaryMatrix::enlarged(int basis_size) const {
  if (basis_size < 1) throw std::invalid_argument("basis size must be >= 1");
  const Eigen::Index b = basis_size;
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(entries_.rows() * b, entries_.cols() * b);
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      big.block(i * b, j * b, b, b).diagonal().setConstant(entries_(i, j));
    }
  }
  return big;
}

int OutputConfiguration::photons() const { return std::accumulate(counts.begin(), counts.end(), 0); }

OutputConfiguration standard_input(int modes, int photons) {
  if (photons < 0 || photons > modes) throw std::invalid_argument("need 0 <= photons <= modes");
  OutputConfiguration c{std::vector<int>(static_cast<std::size_t>(modes), 0)};
  std::fill_n(c.counts.begin(), photons, 1);
  return c;
}

double OutputDistribution::probability(const OutputConfiguration& c) const {
  if (c.modes() != modes || c.photons() != photons) {
    throw std::invalid_argument("configuration shape does not match the distribution");
  }
  return probabilities[configuration_rank(c)];
}

double OutputDistribution::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

std::uint64_t configuration_count(int modes, int photons) {
  if (modes < 0 || photons < 0) return 0;
  if (modes == 0) return photons == 0 ? 1 : 0;
  return binomial_coefficient(modes + photons - 1, photons);
}

std::uint64_t configuration_rank(const OutputConfiguration& c) {
  std::uint64_t rank = 0;
  int remaining = c.photons();
  for (int i = 0; i + 1 < c.modes(); ++i) {
    const int here = c.counts[static_cast<std::size_t>(i)];
    // Configurations placing more photons in mode i come first.
    for (int x = here + 1; x <= remaining; ++x) {
      rank += configuration_count(c.modes() - i - 1, remaining - x);
    }
    remaining -= here;
  }
  return rank;
}

std::vector<OutputConfiguration> enumerate_configurations(int modes, int photons,
                                                          std::uint64_t budget) {
  if (modes < 1 || photons < 0) throw std::invalid_argument("need modes >= 1 and photons >= 0");
  const std::uint64_t count = configuration_count(modes, photons);
  if (count > budget) {
    throw BudgetError(std::to_string(count) + " configurations exceed the budget of " +
                      std::to_string(budget));
  }
  std::vector<OutputConfiguration> out;
  out.reserve(count);
  std::vector<int> counts(static_cast<std::size_t>(modes), 0);
  auto fill = [&](auto&& self, int mode, int remaining) -> void {
    if (mode + 1 == modes) {
      counts[static_cast<std::size_t>(mode)] = remaining;
      out.push_back({counts});
      return;
    }
    for (int x = remaining; x >= 0; --x) {
      counts[static_cast<std::size_t>(mode)] = x;
      self(self, mode + 1, remaining - x);
    }
  };
  fill(fill, 0, photons);
  return out;
}

CostEstimate estimate_ideal_cost(int modes, int photons) {
  CostEstimate c;
  c.configurations = configuration_count(modes, photons);
  c.permanent_size = photons;
  c.permanent_flops = static_cast<double>(c.configurations) * std::ldexp(1.0, photons) * photons;
  return c;
}

CostEstimate estimate_enlarged_cost(int modes, int photons, int basis_size) {
  CostEstimate c = estimate_ideal_cost(modes * basis_size, photons);
  return c;
}

CostEstimate estimate_mixture_cost(int modes, int photons, int basis_size) {
  CostEstimate c = estimate_ideal_cost(modes, photons);
  c.instances = 1;
  for (int j = 0; j < photons; ++j) c.instances *= static_cast<std::uint64_t>(basis_size);
  // Group distributions are cached per photon subset, so at most 2^n ideal runs.
  c.permanent_flops *= std::ldexp(1.0, photons);
  return c;
}

OutputDistribution output_distribution(const UnitaryMatrix& u, const OutputConfiguration& input) {
  if (input.modes() != u.modes()) {
    throw std::invalid_argument("input configuration has the wrong number of modes");
  }
  if (std::any_of(input.counts.begin(), input.counts.end(), [](int c) { return c < 0; })) {
    throw std::invalid_argument("negative occupation number");
  }
  const int n = input.photons();
  if (n > kMaxSpatialPhotons) {
    throw BudgetError("ideal simulation supports at most " + std::to_string(kMaxSpatialPhotons) +
                      " photons");
  }
  const int m = u.modes();
  check_budget(configuration_count(m, n), "ideal simulation");

  OutputDistribution out = empty_distribution(m, n);
  // Column r of `columns` is the output vector of the r-th input photon,
  // i.e. row in_r of U; each output photon then picks a row of it.
  const std::vector<int> in = expand(input);
  Eigen::MatrixXcd columns(m, n);
  for (int r = 0; r < n; ++r) columns.col(r) = u.matrix().row(in[static_cast<std::size_t>(r)]).transpose();
  out.probabilities = single_photon_statistics(columns, out.configurations);
  const double input_norm = occupancy_norm(input);
  for (double& p : out.probabilities) p /= input_norm;
  return out;
}

UnitaryMatrix haar_random_unitary(int modes, std::uint64_t seed) {
  if (modes < 1) throw std::invalid_argument("unitary needs at least one mode");
  const CounterRng rng(seed, /*stream=*/static_cast<std::uint64_t>(modes));
  Eigen::MatrixXcd z(modes, modes);
  std::uint64_t counter = 0;
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) {
      const double re = rng.normal(counter++);
      const double im = rng.normal(counter++);
      z(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  const Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  Eigen::VectorXcd phases(modes);
  for (int i = 0; i < modes; ++i) {
    const double mag = std::abs(r(i, i));
    phases[i] = mag > 0.0 ? r(i, i) / mag : Complex(1.0);
  }
  return UnitaryMatrix(q * phases.asDiagonal());
}

OutputDistribution spatial_distribution_pure(const UnitaryMatrix& u,
                                             std::span<const PhotonSource> photons) {
  check_photons(u, photons, /*pure=*/true, "spatial_distribution_pure");
  const std::vector<PhotonSource> reduced = compress_spectra(photons);
  check_basis(reduced, "spatial_distribution_pure");
  return enlarged_marginal(u, reduced, basis_size_of(reduced));
}

OutputDistribution spatial_distribution_mixed(const UnitaryMatrix& u,
                                              std::span<const PhotonSource> photons) {
  check_photons(u, photons, /*pure=*/false, "spatial_distribution_mixed");
  check_basis(photons, "spatial_distribution_mixed");
  const int m = u.modes();
  const int n = static_cast<int>(photons.size());
  check_budget(configuration_count(m, n), "mixture simulation");

  std::map<unsigned, OutputDistribution> group_cache;
  auto group = [&](unsigned mask) -> const OutputDistribution& {
    auto it = group_cache.find(mask);
    if (it == group_cache.end()) {
      OutputConfiguration in{std::vector<int>(static_cast<std::size_t>(m), 0)};
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) in.counts[static_cast<std::size_t>(j)] = 1;
      }
      it = group_cache.emplace(mask, output_distribution(u, in)).first;
    }
    return it->second;
  };

  // Instances inducing the same partition of photons share one distribution.
  std::map<std::vector<int>, OutputDistribution> partition_cache;
  OutputDistribution out = empty_distribution(m, n);
  for_each_instance(photons, [&](const std::vector<int>& v, double weight) {
    std::vector<int> key(v.size());
    std::vector<int> seen;
    for (std::size_t j = 0; j < v.size(); ++j) {
      auto pos = std::find(seen.begin(), seen.end(), v[j]);
      if (pos == seen.end()) {
        seen.push_back(v[j]);
        pos = seen.end() - 1;
      }
      key[j] = static_cast<int>(pos - seen.begin());
    }
    auto it = partition_cache.find(key);
    if (it == partition_cache.end()) {
      OutputDistribution combined = empty_distribution(m, 0);
      combined.probabilities[0] = 1.0;
      for (std::size_t g = 0; g < seen.size(); ++g) {
        unsigned mask = 0;
        for (std::size_t j = 0; j < key.size(); ++j) {
          if (key[j] == static_cast<int>(g)) mask |= 1u << j;
        }
        combined = convolve(combined, group(mask));
      }
      it = partition_cache.emplace(key, std::move(combined)).first;
    }
    for (std::size_t s = 0; s < out.size(); ++s) {
      out.probabilities[s] += weight * it->second.probabilities[s];
    }
  });
  return out;
}

OutputDistribution spatial_distribution_dephased(const UnitaryMatrix& u,
                                                 std::span<const PhotonSource> photons) {
  check_photons(u, photons, /*pure=*/false, "spatial_distribution_dephased");
  check_basis(photons, "spatial_distribution_dephased");
  const int b = basis_size_of(photons);
  OutputDistribution out = empty_distribution(u.modes(), static_cast<int>(photons.size()));
  for_each_instance(photons, [&](const std::vector<int>& v, double weight) {
    std::vector<PhotonSource> term;
    term.reserve(v.size());
    for (int label : v) term.emplace_back(SpectralAmplitudes::basis_state(label, b));
    const OutputDistribution d = enlarged_marginal(u, term, b);
    for (std::size_t s = 0; s < out.size(); ++s) out.probabilities[s] += weight * d.probabilities[s];
  });
  return out;
}

OutputDistribution convolve(const OutputDistribution& a, const OutputDistribution& b) {
  if (a.modes != b.modes) throw std::invalid_argument("cannot convolve different mode counts");
  OutputDistribution out = empty_distribution(a.modes, a.photons + b.photons);
  OutputConfiguration sum{std::vector<int>(static_cast<std::size_t>(a.modes))};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.probabilities[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (int k = 0; k < a.modes; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        sum.counts[kk] = a.configurations[i].counts[kk] + b.configurations[j].counts[kk];
      }
      out.probabilities[configuration_rank(sum)] += a.probabilities[i] * b.probabilities[j];
    }
  }
  return out;
}

double max_abs_deviation(const OutputDistribution& a, const OutputDistribution& b) {
  if (a.modes != b.modes || a.photons != b.photons || a.size() != b.size()) {
    throw std::invalid_argument("distributions have different shapes");
  }
  double worst = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    worst = std::max(worst, std::abs(a.probabilities[s] - b.probabilities[s]));
  }
  return worst;
}

}  // namespace specmode
