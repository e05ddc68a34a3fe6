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

#include "specmode/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "specmode/binomial.hpp"
#include "specmode/errors.hpp"
#include "specmode/parallel.hpp"
#include "specmode/rng.hpp"
#include "specmode/summation.hpp"

namespace specmode {
namespace {

constexpr std::uint64_t kEnumerationChunk = 1u << 16;
constexpr std::uint64_t kSampleChunk = 1u << 15;

// Nonzero-probability labels and their probabilities, per photon.
struct PhotonSupport {
  std::vector<int> labels;
  std::vector<double> probabilities;
};

std::vector<PhotonSupport> supports(const HardnessQuery& q) {
  std::vector<PhotonSupport> out;
  out.reserve(q.photons().size());
  for (const PhotonSource& photon : q.photons()) {
    const Eigen::VectorXd p = photon.label_probabilities();
    PhotonSupport s;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p[i] > 0.0) {
        s.labels.push_back(static_cast<int>(i));
        s.probabilities.push_back(p[i]);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

void check_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

TailBound tail_bound(double p, int n, int n_hard) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n_hard > n) return {0.0, true};
  return {binomial_upper_tail(n, n_hard, p), false};
}

void check_region_args(int n, int n_hard, double epsilon) {
  if (n_hard < 1) throw std::invalid_argument("n_hard must be >= 1");
  if (n_hard >= n) {
    throw std::invalid_argument("the p_hard <= 1 upper bound requires n_hard < n");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
}

}  // namespace

InstanceVector::InstanceVector(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("instance vector must be non-empty");
  if (std::any_of(labels_.begin(), labels_.end(), [](int l) { return l < 0; })) {
    throw std::invalid_argument("instance labels must be non-negative");
  }
}

HardnessQuery::HardnessQuery(std::vector<PhotonSource> photons, int n_hard, double epsilon)
    : photons_(std::move(photons)), n_hard_(n_hard), epsilon_(epsilon) {
  if (photons_.empty()) throw std::invalid_argument("hardness query needs at least one photon");
  const bool pure = photons_.front().is_pure();
  for (const PhotonSource& p : photons_) {
    if (p.is_pure() != pure) {
      throw std::invalid_argument(
          "hardness query mixes pure and mixed photons; no hybrid formula exists");
    }
  }
  if (n_hard_ < 1) throw std::invalid_argument("n_hard must be >= 1");
  if (!(epsilon_ > 0.0 && epsilon_ < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
}

int HardnessQuery::basis_size() const {
  Eigen::Index b = 0;
  for (const PhotonSource& p : photons_) b = std::max(b, p.basis_size());
  return static_cast<int>(b);
}

std::string_view to_string(HardnessMethod method) {
  switch (method) {
    case HardnessMethod::ExactEnumeration: return "ExactEnumeration";
    case HardnessMethod::ClosedFormIID: return "ClosedFormIID";
    case HardnessMethod::MonteCarlo: return "MonteCarlo";
  }
  return "unknown";
}

HardnessMethod hardness_method_from_string(std::string_view name) {
  for (HardnessMethod m : {HardnessMethod::ExactEnumeration, HardnessMethod::ClosedFormIID,
                           HardnessMethod::MonteCarlo}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown hardness method: " + std::string(name));
}

int max_repetition(const InstanceVector& v) {
  std::vector<int> sorted = v.labels();
  std::sort(sorted.begin(), sorted.end());
  int best = 1;
  int run = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    run = sorted[i] == sorted[i - 1] ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

double instance_probability(const HardnessQuery& q, const InstanceVector& v) {
  if (v.size() != q.n()) {
    throw std::invalid_argument("instance vector length differs from photon count");
  }
  const int b = q.basis_size();
  double p = 1.0;
  if (q.is_pure()) {
    Complex amplitude = 1.0;
    for (int j = 0; j < q.n(); ++j) {
      if (v[j] >= b) throw std::invalid_argument("instance label exceeds basis size");
      amplitude *= q.photons()[static_cast<std::size_t>(j)].pure()[v[j]];
    }
    p = std::norm(amplitude);
  } else {
    for (int j = 0; j < q.n(); ++j) {
      if (v[j] >= b) throw std::invalid_argument("instance label exceeds basis size");
      p *= q.photons()[static_cast<std::size_t>(j)].mixed()[v[j]];
    }
  }
  return p;
}

HardnessResult p_hard_exact(const HardnessQuery& q, const EnumerationOptions& options) {
  HardnessResult result;
  result.method = HardnessMethod::ExactEnumeration;
  const int n = q.n();
  if (q.n_hard() > n) {
    result.terms = 0;
    return result;
  }

  const std::vector<PhotonSupport> support = supports(q);
  std::uint64_t total = 1;
  for (const PhotonSupport& s : support) {
    const std::uint64_t width = s.labels.size();
    if (total > options.budget / width) {
      throw BudgetError("exact enumeration exceeds the budget of " +
                        std::to_string(options.budget) +
                        " instance vectors; use the Monte-Carlo estimator");
    }
    total *= width;
  }

  const int labels = q.basis_size();
  const int n_hard = q.n_hard();
  const std::size_t chunks = (total + kEnumerationChunk - 1) / kEnumerationChunk;
  std::vector<CompensatedSum> partial(chunks);

  parallel_chunks(
      chunks,
      [&](std::size_t chunk) {
        const std::uint64_t begin = chunk * kEnumerationChunk;
        const std::uint64_t end = std::min(total, begin + kEnumerationChunk);
        // Odometer digits for `begin`, last photon fastest.
        std::vector<std::size_t> digit(static_cast<std::size_t>(n));
        std::uint64_t rest = begin;
        for (int j = n - 1; j >= 0; --j) {
          const std::uint64_t width = support[static_cast<std::size_t>(j)].labels.size();
          digit[static_cast<std::size_t>(j)] = rest % width;
          rest /= width;
        }
        std::vector<int> counts(static_cast<std::size_t>(labels));
        CompensatedSum sum;
        for (std::uint64_t t = begin; t < end; ++t) {
          std::fill(counts.begin(), counts.end(), 0);
          int repetition = 0;
          double p = 1.0;
          for (int j = 0; j < n; ++j) {
            const PhotonSupport& s = support[static_cast<std::size_t>(j)];
            const std::size_t d = digit[static_cast<std::size_t>(j)];
            repetition = std::max(repetition, ++counts[static_cast<std::size_t>(s.labels[d])]);
            p *= s.probabilities[d];
          }
          if (repetition >= n_hard) sum.add(p);
          for (int j = n - 1; j >= 0; --j) {
            auto& d = digit[static_cast<std::size_t>(j)];
            if (++d < support[static_cast<std::size_t>(j)].labels.size()) break;
            d = 0;
          }
        }
        partial[chunk] = sum;
      },
      options.threads);

  CompensatedSum sum;
  for (const CompensatedSum& s : partial) sum.add(s);
  result.p_hard = std::clamp(sum.value(), 0.0, 1.0);
  result.terms = total;
  return result;
}

HardnessResult p_hard_iid_exact(int b, int n, int n_hard, const MixtureWeights& weights) {
  if (b < 1 || weights.size() != b) {
    throw std::invalid_argument("weights length must equal the basis size b");
  }
  if (n < 1 || n > 10000) throw std::invalid_argument("n must lie in [1, 10000]");
  if (n_hard < 1) throw std::invalid_argument("n_hard must be >= 1");

  HardnessResult result;
  result.method = HardnessMethod::ClosedFormIID;
  if (n_hard > n) return result;
  if (n_hard == 1) {
    result.p_hard = 1.0;
    return result;
  }

  std::vector<double> log_factorial(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 2; k <= n; ++k) {
    log_factorial[static_cast<std::size_t>(k)] =
        log_factorial[static_cast<std::size_t>(k - 1)] + std::log(static_cast<double>(k));
  }
  auto log_choose = [&](int s, int c) {
    return log_factorial[static_cast<std::size_t>(s)] - log_factorial[static_cast<std::size_t>(c)] -
           log_factorial[static_cast<std::size_t>(s - c)];
  };

  // below[s] = sum over count vectors of the labels seen so far, totalling s
  // with every count < n_hard, of s! / prod(c!) * prod(gamma^c). Each entry
  // is a probability mass <= 1, kept as a log since gamma^s underflows long
  // before s reaches 10^4.
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<double> log_below(static_cast<std::size_t>(n) + 1, kNegInf);
  log_below[0] = 0.0;
  std::vector<double> next(log_below.size());
  std::vector<double> terms;
  const int cap = n_hard - 1;
  for (Eigen::Index label = 0; label < b; ++label) {
    const double gamma = weights[label];
    if (gamma == 0.0) continue;  // only the c = 0 term survives
    const double log_gamma = std::log(gamma);
    for (int s = 0; s <= n; ++s) {
      terms.clear();
      double peak = kNegInf;
      for (int c = 0; c <= std::min(s, cap); ++c) {
        const double prev = log_below[static_cast<std::size_t>(s - c)];
        if (prev == kNegInf) continue;
        terms.push_back(log_choose(s, c) + c * log_gamma + prev);
        peak = std::max(peak, terms.back());
      }
      if (peak == kNegInf) {
        next[static_cast<std::size_t>(s)] = kNegInf;
        continue;
      }
      CompensatedSum acc;
      for (double t : terms) acc.add(std::exp(t - peak));
      next[static_cast<std::size_t>(s)] = peak + std::log(acc.value());
    }
    std::swap(log_below, next);
  }
  const double below = std::exp(log_below[static_cast<std::size_t>(n)]);
  result.p_hard = std::clamp(1.0 - below, 0.0, 1.0);
  return result;
}

HardnessResult p_hard_monte_carlo(const HardnessQuery& q, std::uint64_t samples,
                                  std::uint64_t seed, unsigned threads) {
  if (samples == 0) throw std::invalid_argument("Monte-Carlo needs at least one sample");
  HardnessResult result;
  result.method = HardnessMethod::MonteCarlo;
  result.seed = seed;
  result.terms = samples;
  const int n = q.n();
  if (q.n_hard() > n) {
    result.std_error = 0.0;
    return result;
  }

  // Cumulative label probabilities per photon for inverse-CDF draws.
  std::vector<std::vector<double>> cdf;
  std::vector<int> last_label;
  for (const PhotonSource& photon : q.photons()) {
    const Eigen::VectorXd p = photon.label_probabilities();
    std::vector<double> c(static_cast<std::size_t>(p.size()));
    double running = 0.0;
    int last = 0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      running += p[i];
      c[static_cast<std::size_t>(i)] = running;
      if (p[i] > 0.0) last = static_cast<int>(i);
    }
    cdf.push_back(std::move(c));
    last_label.push_back(last);
  }

  const CounterRng rng(seed);
  const int labels = q.basis_size();
  const int n_hard = q.n_hard();
  const std::size_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_chunks(
      chunks,
      [&](std::size_t chunk) {
        const std::uint64_t begin = chunk * kSampleChunk;
        const std::uint64_t end = std::min(samples, begin + kSampleChunk);
        std::vector<int> counts(static_cast<std::size_t>(labels));
        std::uint64_t local = 0;
        for (std::uint64_t s = begin; s < end; ++s) {
          std::fill(counts.begin(), counts.end(), 0);
          int repetition = 0;
          for (int j = 0; j < n; ++j) {
            const auto& c = cdf[static_cast<std::size_t>(j)];
            const double u = rng.uniform(s * static_cast<std::uint64_t>(n) +
                                         static_cast<std::uint64_t>(j));
            int label = static_cast<int>(std::upper_bound(c.begin(), c.end(), u) - c.begin());
            label = std::min(label, last_label[static_cast<std::size_t>(j)]);
            repetition = std::max(repetition, ++counts[static_cast<std::size_t>(label)]);
          }
          if (repetition >= n_hard) ++local;
        }
        hits[chunk] = local;
      },
      threads);

  std::uint64_t total_hits = 0;
  for (std::uint64_t h : hits) total_hits += h;
  const double p = static_cast<double>(total_hits) / static_cast<double>(samples);
  result.p_hard = p;
  result.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return result;
}

TailBound p_hard_lower_bound_mixed(double purity, int n, int n_hard) {
  check_unit(purity, "purity");
  return tail_bound(purity, n, n_hard);
}

TailBound p_hard_lower_bound_fidelity(double f_min, int n, int n_hard) {
  check_unit(f_min, "F_min");
  return tail_bound(f_min, n, n_hard);
}

std::vector<RegionRow> inequality_region(std::span<const double> f_min_grid, int n, int n_hard,
                                         double epsilon) {
  check_region_args(n, n_hard, epsilon);
  std::vector<RegionRow> rows;
  rows.reserve(f_min_grid.size());
  for (double f : f_min_grid) {
    const double bound = p_hard_lower_bound_fidelity(f, n, n_hard).value;
    rows.push_back({f, bound, bound > epsilon});
  }
  return rows;
}

double fidelity_threshold(int n, int n_hard, double epsilon) {
  check_region_args(n, n_hard, epsilon);
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (binomial_upper_tail(n, n_hard, mid) > epsilon) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::vector<PhotonSource> worst_case_pure_sources(double f_min, int n) {
  check_unit(f_min, "F_min");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double shared = std::sqrt(f_min);
  const double own = std::sqrt(1.0 - f_min);
  std::vector<PhotonSource> photons;
  photons.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
    c[0] = shared;
    c[i + 1] = own;
    photons.emplace_back(SpectralAmplitudes(std::move(c)));
  }
  return photons;
}

std::vector<PhotonSource> best_case_pure_sources(double f_min, int n) {
  check_unit(f_min, "F_min");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<PhotonSource> photons;
  photons.reserve(static_cast<std::size_t>(n));
  Eigen::VectorXcd odd(2);
  odd << std::sqrt(f_min), std::sqrt(1.0 - f_min);
  photons.emplace_back(SpectralAmplitudes(std::move(odd)));
  for (int i = 1; i < n; ++i) photons.emplace_back(SpectralAmplitudes::basis_state(0, 2));
  return photons;
}

std::vector<PhotonSource> identical_pure_sources(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return std::vector<PhotonSource>(static_cast<std::size_t>(n),
                                   PhotonSource(SpectralAmplitudes::basis_state(0, 1)));
}

std::vector<PhotonSource> distinguishable_pure_sources(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<PhotonSource> photons;
  photons.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) photons.emplace_back(SpectralAmplitudes::basis_state(j, n));
  return photons;
}

std::vector<PhotonSource> iid_mixed_sources(const MixtureWeights& weights, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return std::vector<PhotonSource>(static_cast<std::size_t>(n), PhotonSource(weights));
}

}  // namespace specmode
