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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "specmode/errors.hpp"
#include "specmode/hardness.hpp"
#include "specmode/json_io.hpp"
#include "test_support.hpp"

using namespace specmode;

namespace {

std::vector<std::vector<double>> label_probabilities(const HardnessQuery& q) {
  std::vector<std::vector<double>> out;
  for (const PhotonSource& p : q.photons()) {
    const Eigen::VectorXd v = p.label_probabilities();
    out.emplace_back(v.data(), v.data() + v.size());
  }
  return out;
}

MixtureWeights weights(std::initializer_list<double> c) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (double x : c) v[i++] = x;
  return MixtureWeights(v);
}

// Every instance vector over basis size b, odometer style.
template <typename F>
void each_vector(int n, int b, F&& f) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  while (true) {
    f(InstanceVector(v));
    int j = n - 1;
    while (j >= 0 && ++v[static_cast<std::size_t>(j)] == b) v[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) return;
  }
}

}  // namespace

TEST_CASE("max repetition") {
  CHECK(max_repetition(InstanceVector({1, 2, 1, 2})) == 2);
  CHECK(max_repetition(InstanceVector({1, 2, 3, 2, 2})) == 3);
  CHECK(max_repetition(InstanceVector({0, 0, 0})) == 3);
  CHECK(max_repetition(InstanceVector({4})) == 1);
  CHECK_THROWS_AS(InstanceVector({}), std::invalid_argument);
  CHECK_THROWS_AS(InstanceVector({0, -1}), std::invalid_argument);
}

TEST_CASE("instance probability") {
  SUBCASE("maximally mixed: every vector has probability 1/b^n") {
    const HardnessQuery q(iid_mixed_sources(MixtureWeights::uniform(3), 4), 2, 0.5);
    each_vector(4, 3, [&](const InstanceVector& v) {
      CHECK(instance_probability(q, v) == doctest::Approx(1.0 / 81.0).epsilon(1e-14));
    });
  }
  SUBCASE("identical pure photons: only the all-zero vector") {
    const std::vector<PhotonSource> photons(3, PhotonSource(SpectralAmplitudes::basis_state(0, 2)));
    const HardnessQuery q(photons, 3, 0.5);
    each_vector(3, 2, [&](const InstanceVector& v) {
      const bool zero = v.labels() == std::vector<int>{0, 0, 0};
      CHECK(instance_probability(q, v) == (zero ? 1.0 : 0.0));
    });
  }
  SUBCASE("product of per-photon weights") {
    const HardnessQuery q({weights({0.5, 0.5}), weights({0.25, 0.75})}, 2, 0.5);
    CHECK(instance_probability(q, InstanceVector({0, 1})) == doctest::Approx(0.375));
  }
  SUBCASE("pure photons use squared amplitude products") {
    Eigen::VectorXcd a(2);
    a << Complex(0, 0.6), 0.8;
    const HardnessQuery q({SpectralAmplitudes(a), SpectralAmplitudes(a)}, 2, 0.5);
    CHECK(instance_probability(q, InstanceVector({0, 1})) == doctest::Approx(0.36 * 0.64));
  }
  SUBCASE("shape errors") {
    const HardnessQuery q(iid_mixed_sources(MixtureWeights::uniform(2), 2), 2, 0.5);
    CHECK_THROWS_AS(instance_probability(q, InstanceVector({0})), std::invalid_argument);
    CHECK_THROWS_AS(instance_probability(q, InstanceVector({0, 2})), std::invalid_argument);
  }
}

TEST_CASE("query validation") {
  const PhotonSource pure = SpectralAmplitudes::basis_state(0, 1);
  const PhotonSource mixed = MixtureWeights::uniform(2);
  CHECK_THROWS_AS(HardnessQuery({pure, mixed}, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(HardnessQuery({}, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(HardnessQuery({pure}, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(HardnessQuery({pure}, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(HardnessQuery({pure}, 1, 1.0), std::invalid_argument);
}

TEST_CASE("exact p_hard limiting cases") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(p_hard_exact(HardnessQuery(identical_pure_sources(n), n, 0.5)).p_hard == 1.0);
    if (n >= 2) {
      CHECK(p_hard_exact(HardnessQuery(distinguishable_pure_sources(n), 2, 0.5)).p_hard == 0.0);
    }
  }
  const HardnessResult r =
      p_hard_exact(HardnessQuery(iid_mixed_sources(MixtureWeights::uniform(2), 2), 2, 0.5));
  CHECK(r.p_hard == 0.5);
  CHECK(r.method == HardnessMethod::ExactEnumeration);
  CHECK(r.terms == 4);
  CHECK_FALSE(r.std_error);
}

TEST_CASE("n_hard above n gives zero") {
  const HardnessQuery q(iid_mixed_sources(MixtureWeights::uniform(2), 3), 4, 0.5);
  CHECK(p_hard_exact(q).p_hard == 0.0);
  CHECK(p_hard_iid_exact(2, 3, 4, MixtureWeights::uniform(2)).p_hard == 0.0);
  CHECK(p_hard_monte_carlo(q, 100, 1).p_hard == 0.0);
}

TEST_CASE("exact enumeration respects its budget") {
  const HardnessQuery q(iid_mixed_sources(MixtureWeights::uniform(4), 10), 3, 0.5);
  EnumerationOptions small;
  small.budget = 1000;
  CHECK_THROWS_AS(p_hard_exact(q, small), BudgetError);
  // Zero-weight labels do not count toward the budget.
  const HardnessQuery sparse(worst_case_pure_sources(0.5, 12), 3, 0.5);
  small.budget = 4096;
  CHECK(p_hard_exact(sparse, small).terms == 4096);
}

TEST_CASE("exact enumeration is identical across thread counts") {
  std::mt19937_64 rng(3);
  std::vector<PhotonSource> photons;
  for (int j = 0; j < 9; ++j) photons.emplace_back(testing::random_weights(rng, 4));
  const HardnessQuery q(photons, 3, 0.5);
  EnumerationOptions one;
  one.threads = 1;
  EnumerationOptions many;
  many.threads = 7;
  CHECK(p_hard_exact(q, one).p_hard == p_hard_exact(q, many).p_hard);
}

TEST_CASE("property: completeness and agreement with brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 5;
    const int b = 1 + (trial / 5) % 4;
    std::vector<PhotonSource> photons;
    const bool pure = trial % 2 == 0;
    for (int j = 0; j < n; ++j) {
      if (pure) {
        photons.emplace_back(testing::random_amplitudes(rng, b));
      } else {
        photons.emplace_back(testing::random_weights(rng, b, 0.2));
      }
    }
    const HardnessQuery q(photons, 1, 0.5);
    double total = 0.0;
    each_vector(n, b, [&](const InstanceVector& v) { total += instance_probability(q, v); });
    CHECK(std::abs(total - 1.0) < 1e-9);

    double previous = 1.0 + 1e-12;
    for (int n_hard = 1; n_hard <= n + 1; ++n_hard) {
      const HardnessQuery qk(photons, n_hard, 0.5);
      const double exact = p_hard_exact(qk).p_hard;
      CHECK(exact == doctest::Approx(oracle::p_hard_brute_force(label_probabilities(qk), n_hard)).epsilon(1e-12));
      CHECK(exact <= previous);
      CHECK(exact >= 0.0);
      previous = exact;
    }
  }
}

TEST_CASE("iid closed form examples") {
  CHECK(p_hard_iid_exact(2, 2, 2, MixtureWeights::uniform(2)).p_hard == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p_hard_iid_exact(3, 3, 3, MixtureWeights::uniform(3)).p_hard == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
  CHECK(p_hard_iid_exact(3, 5, 1, weights({0.2, 0.3, 0.5})).p_hard == 1.0);
  CHECK(p_hard_iid_exact(2, 2, 2, MixtureWeights::uniform(2)).method == HardnessMethod::ClosedFormIID);
  CHECK_THROWS_AS(p_hard_iid_exact(3, 2, 2, MixtureWeights::uniform(2)), std::invalid_argument);
  CHECK_THROWS_AS(p_hard_iid_exact(2, 10001, 2, MixtureWeights::uniform(2)), std::invalid_argument);
}

TEST_CASE("iid closed form matches enumeration") {
  std::mt19937_64 rng(5);
  for (int b = 1; b <= 4; ++b) {
    for (int n = 1; n <= 6; ++n) {
      for (const MixtureWeights& w : {MixtureWeights::uniform(b), testing::random_weights(rng, b, 0.25)}) {
        for (int n_hard = 1; n_hard <= n; ++n_hard) {
          const double exact = p_hard_exact(HardnessQuery(iid_mixed_sources(w, n), n_hard, 0.5)).p_hard;
          CHECK(std::abs(p_hard_iid_exact(b, n, n_hard, w).p_hard - exact) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("iid closed form at n = 10^4") {
  // Two equally likely labels and n_hard = n/2 + 1: not hard only at an exact
  // 5000/5000 split, so p_hard = 1 - C(10^4, 5000) / 2^(10^4).
  const double split = std::exp(std::lgamma(10001.0) - 2.0 * std::lgamma(5001.0) - 10000.0 * std::log(2.0));
  const double got = p_hard_iid_exact(2, 10000, 5001, MixtureWeights::uniform(2)).p_hard;
  CHECK(got == doctest::Approx(1.0 - split).epsilon(1e-9));
}

TEST_CASE("Monte-Carlo estimator") {
  SUBCASE("degenerate distribution") {
    const HardnessResult r = p_hard_monte_carlo(HardnessQuery(identical_pure_sources(4), 4, 0.5), 1000, 17);
    CHECK(r.p_hard == 1.0);
    CHECK(r.std_error == 0.0);
    CHECK(r.seed == 17u);
    CHECK(r.method == HardnessMethod::MonteCarlo);
  }
  SUBCASE("two maximally mixed photons") {
    const HardnessQuery q(iid_mixed_sources(MixtureWeights::uniform(2), 2), 2, 0.5);
    const HardnessResult r = p_hard_monte_carlo(q, 1'000'000, 2024);
    CHECK(std::abs(r.p_hard - 0.5) <= 3.0 * *r.std_error);
  }
  SUBCASE("uniform b = 4, n = 12, n_hard = 6 against the closed form") {
    const HardnessQuery q(iid_mixed_sources(MixtureWeights::uniform(4), 12), 6, 0.05);
    const double exact = p_hard_iid_exact(4, 12, 6, MixtureWeights::uniform(4)).p_hard;
    const HardnessResult r = p_hard_monte_carlo(q, 1'000'000, 99);
    CHECK(std::abs(r.p_hard - exact) <= 4.0 * *r.std_error);
  }
  SUBCASE("deterministic per seed and independent of threads") {
    const HardnessQuery q(worst_case_pure_sources(0.4, 6), 3, 0.5);
    const HardnessResult a = p_hard_monte_carlo(q, 200'000, 5, 1);
    const HardnessResult b = p_hard_monte_carlo(q, 200'000, 5, 5);
    const HardnessResult c = p_hard_monte_carlo(q, 200'000, 6, 1);
    CHECK(a.p_hard == b.p_hard);
    CHECK(a.p_hard != c.p_hard);
  }
  CHECK_THROWS_AS(p_hard_monte_carlo(HardnessQuery(identical_pure_sources(2), 2, 0.5), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("lower bounds") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(p_hard_lower_bound_mixed(1.0, n, k).value == 1.0);
  }
  CHECK(p_hard_lower_bound_mixed(0.5, 2, 2).value == 0.25);
  CHECK(p_hard_lower_bound_fidelity(1.0, 5, 3).value == 1.0);
  CHECK(p_hard_lower_bound_fidelity(0.0, 5, 2).value == 0.0);
  CHECK(p_hard_lower_bound_fidelity(0.5, 3, 2).value == doctest::Approx(0.5).epsilon(1e-15));

  const TailBound over = p_hard_lower_bound_mixed(0.5, 2, 3);
  CHECK(over.value == 0.0);
  CHECK(over.n_hard_exceeds_n);
  CHECK_FALSE(p_hard_lower_bound_mixed(0.5, 2, 2).n_hard_exceeds_n);
  CHECK_THROWS_AS(p_hard_lower_bound_mixed(1.5, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(p_hard_lower_bound_fidelity(-0.1, 2, 2), std::invalid_argument);

  // Maximally mixed b = 2, n = 2: bound 0.25 against the exact 0.5.
  const double bound = p_hard_lower_bound_mixed(purity(MixtureWeights::uniform(2)), 2, 2).value;
  CHECK(bound == 0.25);
  CHECK(bound <= p_hard_exact(HardnessQuery(iid_mixed_sources(MixtureWeights::uniform(2), 2), 2, 0.5)).p_hard);
}

TEST_CASE("property: purity bound holds for iid mixtures") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const int b = 1 + trial % 4;
    const int n = 1 + (trial * 7) % 7;
    const MixtureWeights w = testing::random_weights(rng, b, 0.2);
    for (int n_hard = 1; n_hard <= n; ++n_hard) {
      const double exact = p_hard_iid_exact(b, n, n_hard, w).p_hard;
      CHECK(p_hard_lower_bound_mixed(purity(w), n, n_hard).value <= exact + 1e-10);
    }
  }
}

TEST_CASE("purity required for hardness vanishes with n") {
  bool reached = false;
  for (int n = 3; n <= 400 && !reached; ++n) {
    reached = p_hard_lower_bound_mixed(0.05, n, 3).value >= 0.99;
  }
  CHECK(reached);
}

TEST_CASE("worst-case construction") {
  SUBCASE("limits") {
    for (const PhotonSource& p : worst_case_pure_sources(1.0, 4)) {
      CHECK(p.pure().coeffs().isApprox(Eigen::VectorXcd::Unit(5, 0)));
    }
    const auto zero = worst_case_pure_sources(0.0, 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(zero[static_cast<std::size_t>(i)].pure().coeffs().isApprox(Eigen::VectorXcd::Unit(5, i + 1)));
    }
  }
  SUBCASE("every pair shares overlap F_min") {
    const auto photons = worst_case_pure_sources(0.36, 3);
    for (std::size_t i = 0; i < photons.size(); ++i) {
      for (std::size_t k = i + 1; k < photons.size(); ++k) {
        CHECK(std::abs(overlap(photons[i].pure(), photons[k].pure()) - 0.36) < 1e-12);
        CHECK(std::abs(fidelity(photons[i].pure(), photons[k].pure()) - 0.36 * 0.36) < 1e-12);
      }
    }
  }
  SUBCASE("exact p_hard equals the fidelity tail for n_hard >= 2") {
    for (int n = 1; n <= 6; ++n) {
      for (double f : {0.0, 0.3, 0.64, 1.0}) {
        for (int n_hard = 1; n_hard <= n; ++n_hard) {
          const double exact = p_hard_exact(HardnessQuery(worst_case_pure_sources(f, n), n_hard, 0.5)).p_hard;
          const double tail = p_hard_lower_bound_fidelity(f, n, n_hard).value;
          if (n_hard >= 2) {
            CHECK(std::abs(exact - tail) < 1e-10);
          } else {
            // Every instance has #(v) >= 1, so the tail is only a bound here.
            CHECK(exact == 1.0);
            CHECK(tail <= exact);
          }
        }
      }
    }
  }
}

TEST_CASE("best-case construction") {
  const auto photons = best_case_pure_sources(0.7, 4);
  const HardnessQuery q(photons, 3, 0.5);
  CHECK(instance_probability(q, InstanceVector({0, 0, 0, 0})) == doctest::Approx(0.7));
  CHECK(instance_probability(q, InstanceVector({1, 0, 0, 0})) == doctest::Approx(0.3));
  for (std::size_t k = 1; k < photons.size(); ++k) {
    CHECK(fidelity(photons[0].pure(), photons[k].pure()) == doctest::Approx(0.7).epsilon(1e-14));
  }
  CHECK(p_hard_exact(q).p_hard == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p_hard_exact(HardnessQuery(best_case_pure_sources(0.7, 2), 2, 0.5)).p_hard == doctest::Approx(0.7).epsilon(1e-15));
  for (const PhotonSource& p : best_case_pure_sources(1.0, 3)) {
    CHECK(p.pure().coeffs().isApprox(Eigen::VectorXcd::Unit(2, 0)));
  }
}

TEST_CASE("inequality region") {
  const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  const auto rows = inequality_region(grid, 5, 2, 0.9);
  REQUIRE(rows.size() == grid.size());
  CHECK_FALSE(rows.front().in_region);
  CHECK(rows.back().in_region);
  CHECK(rows.back().lower_bound == 1.0);
  CHECK_THROWS_AS(inequality_region(grid, 3, 3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(inequality_region(grid, 3, 2, 0.0), std::invalid_argument);

  // Threshold shrinks with n at fixed n_hard and grows with n_hard at fixed n.
  double previous = 1.0;
  for (int n = 3; n <= 30; ++n) {
    const double t = fidelity_threshold(n, 2, 0.5);
    CHECK(t < previous);
    CHECK(p_hard_lower_bound_fidelity(t, n, 2).value == doctest::Approx(0.5).epsilon(1e-10));
    previous = t;
  }
  previous = 0.0;
  for (int n_hard = 2; n_hard <= 9; ++n_hard) {
    const double t = fidelity_threshold(10, n_hard, 0.5);
    CHECK(t > previous);
    previous = t;
  }
}

TEST_CASE("hardness result JSON round-trips") {
  HardnessResult r;
  r.p_hard = 0.1 + 0.2;
  r.method = HardnessMethod::MonteCarlo;
  r.std_error = 1.0 / 3.0;
  r.seed = 18446744073709551615ULL;
  r.terms = 10;
  const auto parsed = hardness_result_from_json(nlohmann::json::parse(hardness_result_json(r, 0.25)));
  CHECK(parsed.p_hard == r.p_hard);
  CHECK(parsed.std_error == r.std_error);
  CHECK(parsed.seed == r.seed);
  CHECK(parsed.method == r.method);
  const auto exact = hardness_result_from_json(nlohmann::json::parse(hardness_result_json(HardnessResult{})));
  CHECK_FALSE(exact.seed);
  CHECK_FALSE(exact.std_error);
}
