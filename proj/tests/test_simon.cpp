// Copyright 2026 The macrosup developers
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "macrosup/algos.hpp"
#include "macrosup/evolve.hpp"
#include "macrosup/measure.hpp"
#include "macrosup/pauli_kernels.hpp"
#include "macrosup/vcm.hpp"

using namespace macrosup;

TEST_CASE("oracle honors the promise for every a, n <= 10") {
  for (int n = 2; n <= 10; ++n) {
    for (std::uint64_t a = 1; a < dim_of(n); a += (n <= 5 ? 1 : 101)) {
      const SimonOracle oracle(n, a);
      std::set<std::uint64_t> images;
      for (std::uint64_t w = 0; w < dim_of(n); ++w) {
        CHECK(oracle.g(w) == oracle.g(w ^ a));
        CHECK(oracle.g(w) < dim_of(n - 1));
        images.insert(oracle.g(w));
      }
      CHECK(images.size() == dim_of(n - 1));
    }
  }
  CHECK_THROWS_AS(SimonOracle(3, 0), std::domain_error);
}

TEST_CASE("oracle example n = 2, a = 0b11") {
  const SimonOracle oracle(2, 0b11);
  CHECK(oracle.g(0b00) == 0);
  CHECK(oracle.g(0b11) == 0);
  CHECK(oracle.g(0b01) == 1);
  CHECK(oracle.g(0b10) == 1);
}

TEST_CASE("simon_state_s1") {
  // n = 2, a = 0b11: (|00>|0> + |11>|0> + |01>|1> + |10>|1>)/2.
  const PureState p = simon_state_s1(2, 0b11);
  CHECK(p[0b000].real() == doctest::Approx(0.5));
  CHECK(p[0b110].real() == doctest::Approx(0.5));
  CHECK(p[0b011].real() == doctest::Approx(0.5));
  CHECK(p[0b101].real() == doctest::Approx(0.5));

  for (int n = 2; n <= 6; ++n) {
    const PureState psi = simon_state_s1(n, dim_of(n) - 1);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("measuring register 2 collapses onto the post-measurement state") {
  const int n = 3;
  const std::uint64_t a = 0b101;
  const PureState psi = simon_state_s1(n, a);
  std::vector<int> second_register;
  for (int i = 0; i < n - 1; ++i) second_register.push_back(n + 1 + i);

  Rng rng(5);
  const MeasurementOutcome m = measure_subsystem_z(psi, second_register, rng);
  // Outcome g(w*) for some w*; the post state is the two-term superposition.
  const std::uint64_t g = static_cast<std::uint64_t>(m.value);
  const SimonOracle oracle(n, a);
  std::uint64_t w_star = dim_of(n);
  for (std::uint64_t w = 0; w < dim_of(n); ++w) {
    if (oracle.g(w) == g) {
      w_star = w;
      break;
    }
  }
  REQUIRE(w_star < dim_of(n));
  const double overlap = std::abs(
      inner_product(m.post_state, simon_post_state(n, a, w_star)));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("H_p at s = 1 annihilates |w> (x) |g(w)>") {
  const int n = 4;
  const std::uint64_t a = 0b0110;
  const InstanceSpec spec = SimonSpec{n, a};
  CHECK(hamiltonian_apply(spec, 1.0, simon_state_s1(n, a)).norm() < 1e-12);
}

TEST_CASE("e_max formula: exhaustive over every a and w*, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t a = 1; a < dim_of(n); ++a) {
      const double expected = simon_emax_formula(n, a);
      for (std::uint64_t w = 0; w < dim_of(n); ++w) {
        const double numeric =
            max_eigenpair(build_vcm(simon_post_state(n, a, w))).e_max;
        CHECK(numeric == doctest::Approx(expected).epsilon(1e-9));
      }
    }
  }
  CHECK(simon_emax_formula(4, 0b0100) == doctest::Approx(2.0));
  CHECK(simon_emax_formula(5, 0b10101) == doctest::Approx(3.0));
  CHECK_THROWS_AS(simon_emax_formula(4, 0), std::domain_error);
}

TEST_CASE("ground state continuation and the n-independent gap") {
  const int n = 3;
  const std::uint64_t a = 0b011;
  const InstanceSpec spec = SimonSpec{n, a};
  PureState prev = PureState::uniform_superposition(2 * n - 1);
  for (int i = 0; i <= 20; ++i) {
    const double s = i / 20.0;
    const PureState gs = simon_ground_state(n, a, s);
    PureState img = hamiltonian_apply(spec, s, gs);
    const double energy = inner_product(gs, img).real();
    add_scaled(img, -energy, gs);
    CHECK(img.norm() <= 1e-8);
    CHECK(std::abs(inner_product(prev, gs)) > 0.95);
    prev = gs;
  }
  CHECK(std::abs(inner_product(simon_ground_state(n, a, 1.0),
                               simon_state_s1(n, a))) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Residuals stay tight across sizes.
  for (int nn : {4, 5}) {
    const std::uint64_t aa = dim_of(nn) - 2;
    for (int i = 0; i <= 20; ++i) {
      const double s = i / 20.0;
      const PureState gs = simon_ground_state(nn, aa, s);
      PureState img = hamiltonian_apply(SimonSpec{nn, aa}, s, gs);
      const double energy = inner_product(gs, img).real();
      add_scaled(img, -energy, gs);
      CHECK(img.norm() <= 1e-8);
    }
  }

  for (double s : {0.3, 0.7}) {
    std::vector<double> gaps;
    for (int nn = 2; nn <= 5; ++nn) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
          dense_hamiltonian(SimonSpec{nn, 1}, s));
      REQUIRE(es.info() == Eigen::Success);
      const std::uint64_t deg = dim_of(nn);
      gaps.push_back(es.eigenvalues()(deg) - es.eigenvalues()(0));
      CHECK(es.eigenvalues()(deg - 1) - es.eigenvalues()(0) < 1e-9);
    }
    for (double g : gaps) {
      CHECK(g == doctest::Approx(gaps.front()).epsilon(1e-9));
      CHECK(g == doctest::Approx(simon_gap(s)).epsilon(1e-9));
    }
  }
}

TEST_CASE("numeric ground-space tracking reproduces the sector construction") {
  const int n = 3;
  const std::uint64_t a = 0b110;
  const InstanceSpec spec = SimonSpec{n, a};
  const std::uint64_t dim = dim_of(2 * n - 1);

  PureState tracked = PureState::uniform_superposition(2 * n - 1);
  const int steps = 30;
  for (int k = 1; k <= steps; ++k) {
    const double s = static_cast<double>(k) / steps;
    const auto eig =
        instantaneous_eigenstates(spec, s, static_cast<int>(dim));
    const double e0 = eig[0].first;
    PureState projected = PureState::zeros(2 * n - 1);
    for (const auto& [e, v] : eig) {
      if (e - e0 > 1e-9) break;
      add_scaled(projected, inner_product(v, tracked), v);
    }
    projected.normalize();
    tracked = projected;
    const double agree =
        std::abs(inner_product(tracked, simon_ground_state(n, a, s)));
    CHECK(agree >= 1.0 - 1e-6);
  }
}

TEST_CASE("dense Hamiltonian is Hermitian with the closed-form E0") {
  for (double s : {0.0, 0.6, 1.0}) {
    const int n = 3;
    const Eigen::MatrixXcd h = dense_hamiltonian(SimonSpec{n, 0b101}, s);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    // (n-1) decoupled second-register modes, each (1 - |h|)/2 when aligned
    CHECK(es.eigenvalues()(0) ==
          doctest::Approx((n - 1) * 0.5 * (1.0 - simon_gap(s)))
              .epsilon(1e-12));
  }
}

TEST_CASE("reconstructed observable carries the (-1)^{w*_l} signs") {
  const int n = 4;
  const std::uint64_t a = 0b1101;
  const std::uint64_t w_star = 0b0110;
  const MaxEigenpair top =
      max_eigenpair(build_vcm(simon_post_state(n, a, w_star)));
  REQUIRE_FALSE(top.degenerate);
  CHECK(reconstructed_observable_check(SimonSpec{n, a}, top, w_star) ==
        ObservableCheck::match);
}

TEST_CASE("simon_recover") {
  // n = 3, samples {011, 101}: brute-force the null space as the oracle
  // (it is {111}; 110 fails 110.011 = 1, so 110 is not a candidate).
  const int n = 3;
  const std::vector<std::uint64_t> samples = {0b011, 0b101};
  std::vector<std::uint64_t> null_space;
  for (std::uint64_t v = 1; v < dim_of(n); ++v) {
    bool ok = true;
    for (std::uint64_t x : samples) ok = ok && parity_dot(v, x) == 0;
    if (ok) null_space.push_back(v);
  }
  REQUIRE(null_space.size() == 1);
  CHECK(null_space[0] == 0b111);
  const SimonRecovery rec = simon_recover(n, samples);
  CHECK(rec.recovered);
  CHECK(rec.a == null_space[0]);

  // Empty and insufficient sample sets.
  CHECK_FALSE(simon_recover(n, {}).recovered);
  CHECK_FALSE(simon_recover(n, {0b011}).recovered);

  // Full-rank samples violate the promise.
  CHECK_THROWS_AS(simon_recover(2, {0b01, 0b10, 0b11}), NumericError);
}

TEST_CASE("sampled runs always recover the planted a once rank n-1 is hit") {
  // Samples drawn from the true x-basis distribution of the post state:
  // uniform over the dual subspace {x : x.a = 0}.
  for (int n = 2; n <= 6; ++n) {
    for (int seed = 0; seed < 100; seed += 7) {
      Rng rng(seed);
      std::uniform_int_distribution<std::uint64_t> dist(1, dim_of(n) - 1);
      const std::uint64_t a = dist(rng);
      std::vector<std::uint64_t> samples;
      for (int guard = 0; guard < 1000; ++guard) {
        std::uniform_int_distribution<std::uint64_t> xd(0, dim_of(n) - 1);
        const std::uint64_t x = xd(rng);
        if (parity_dot(x, a) != 0) continue;
        samples.push_back(x);
        const SimonRecovery rec = simon_recover(n, samples);
        if (rec.recovered) {
          CHECK(rec.a == a);
          break;
        }
      }
      CHECK(simon_recover(n, samples).recovered);
    }
  }
}
