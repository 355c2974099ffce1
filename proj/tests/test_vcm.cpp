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

#include <algorithm>
#include <cmath>

#include "macrosup/algos.hpp"
#include "macrosup/pauli_kernels.hpp"
#include "macrosup/scaling.hpp"
#include "macrosup/vcm.hpp"

using namespace macrosup;

namespace {

PureState random_state(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> amps(dim_of(n));
  for (auto& a : amps) a = Complex{g(rng), g(rng)};
  return PureState::from_amplitudes(n, std::move(amps));
}

PureState random_product_state(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::array<Complex, 2>> site(n);
  for (auto& q : site) {
    q = {Complex{g(rng), g(rng)}, Complex{g(rng), g(rng)}};
  }
  std::vector<Complex> amps(dim_of(n));
  for (std::uint64_t w = 0; w < dim_of(n); ++w) {
    Complex prod{1, 0};
    for (int l = 1; l <= n; ++l) {
      prod *= site[l - 1][(w >> (n - l)) & 1u];
    }
    amps[w] = prod;
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

PureState ghz_x(int n) {
  std::vector<Complex> amps(dim_of(n), Complex{0, 0});
  for (std::uint64_t w = 0; w < dim_of(n); ++w) {
    if (popcount64(w) % 2 == 0) amps[w] = 1.0;
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

// Relabel sites: new site perm[l] holds what site l held.
PureState permute_sites(const PureState& psi, const std::vector<int>& perm) {
  const int n = psi.num_qubits();
  std::vector<Complex> amps(psi.dim(), Complex{0, 0});
  for (std::uint64_t w = 0; w < psi.dim(); ++w) {
    std::uint64_t nw = 0;
    for (int l = 1; l <= n; ++l) {
      const std::uint64_t bit = (w >> (n - l)) & 1u;
      nw |= bit << (n - perm[l - 1]);
    }
    amps[nw] = psi[w];
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

std::vector<double> sorted_eigenvalues(const PureState& psi) {
  const Eigen::VectorXd ev = vcm_eigenvalues(build_vcm(psi));
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace

TEST_CASE("VCM of the |+> product state") {
  const PureState plus = PureState::uniform_superposition(3);
  const Vcm v = build_vcm(plus);

  // Per-site diagonal is (0, 1, 1); cross-site blocks vanish.
  for (int l = 1; l <= 3; ++l) {
    CHECK(std::abs(v.matrix(Vcm::index(l, PauliAxis::X),
                            Vcm::index(l, PauliAxis::X))) < 1e-12);
    CHECK(v.matrix(Vcm::index(l, PauliAxis::Y), Vcm::index(l, PauliAxis::Y))
              .real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.matrix(Vcm::index(l, PauliAxis::Z), Vcm::index(l, PauliAxis::Z))
              .real() == doctest::Approx(1.0).epsilon(1e-12));
    // the sigma_y sigma_z = i sigma_x covariance inside the site block
    CHECK(std::abs(v.matrix(Vcm::index(l, PauliAxis::Y),
                            Vcm::index(l, PauliAxis::Z)) -
                   Complex{0, 1}) < 1e-12);
  }
  for (int l = 1; l <= 3; ++l) {
    for (int l2 = l + 1; l2 <= 3; ++l2) {
      for (PauliAxis a1 : kAllAxes) {
        for (PauliAxis a2 : kAllAxes) {
          CHECK(std::abs(v.matrix(Vcm::index(l, a1), Vcm::index(l2, a2))) <
                1e-12);
        }
      }
    }
  }

  // Each site block has eigenvalues {0, 0, 2}: the product-state law.
  const auto ev = sorted_eigenvalues(plus);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(ev[i]) < 1e-9);
  for (int i = 6; i < 9; ++i) CHECK(ev[i] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("GHZ-x VCM spectrum matches the J (x) I block structure") {
  // k_a + 1 qubits in the x-basis GHZ state: eigenvalues k_a+1 (simple),
  // 1 with multiplicity 2(k_a+1), 0 with multiplicity k_a.
  for (int k : {2, 3, 5}) {
    const int q = k + 1;
    const auto ev = sorted_eigenvalues(ghz_x(q));
    REQUIRE(static_cast<int>(ev.size()) == 3 * q);
    for (int i = 0; i < k; ++i) CHECK(std::abs(ev[i]) < 1e-9);
    for (int i = k; i < k + 2 * q; ++i) {
      CHECK(ev[i] == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(ev.back() == doctest::Approx(static_cast<double>(q)).epsilon(1e-9));
  }
}

TEST_CASE("Simon post-measurement VCM spectrum") {
  // n = 4, a = 0b1111, w* = 0b0110: involved block J'_4 (x) I_8 plus three
  // z-basis second-register qubits contributing {2, 0, 0} each.
  const auto ev = sorted_eigenvalues(simon_post_state(4, 0b1111, 0b0110));
  REQUIRE(ev.size() == 21);
  std::vector<double> expected;
  expected.insert(expected.end(), 9, 0.0);             // 3 + 6 zeros
  expected.insert(expected.end(), 8, 1.0);             // I_{2 k_a}
  expected.insert(expected.end(), 3, 2.0);             // ancilla blocks
  expected.push_back(4.0);                             // k_a
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(ev[i] == doctest::Approx(expected[i]).epsilon(1e-9));
  }
}

TEST_CASE("max_eigenpair examples") {
  Rng rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const PureState prod = random_product_state(4, rng);
    CHECK(max_eigenpair(build_vcm(prod)).e_max ==
          doctest::Approx(2.0).epsilon(1e-9));
  }

  // BV final state, n = 3, a = 0b101: e_max = k_a + 1 = 3.
  const MaxEigenpair top = max_eigenpair(build_vcm(bv_state_s1(3, 0b101)));
  CHECK(top.e_max == doctest::Approx(3.0).epsilon(1e-9));
  CHECK_FALSE(top.degenerate);
  // Reconstructed observables carry unit coefficient norm.
  CHECK(top.u_max.coeff_norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dense 9x9 VCM of the 3-qubit GHZ-x block reproduces e_max = 3") {
  // Independent route: entry-by-entry serial correlations, then a dense
  // eigensolve of the explicitly assembled matrix.
  const PureState ghz = ghz_x(3);
  Eigen::MatrixXcd v(9, 9);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      const int li = i / 3 + 1, lj = j / 3 + 1;
      const auto ai = static_cast<PauliAxis>(i % 3);
      const auto aj = static_cast<PauliAxis>(j % 3);
      v(i, j) = serial::pauli_correlation(ghz, li, ai, lj, aj) -
                serial::pauli_expectation(ghz, li, ai) *
                    serial::pauli_expectation(ghz, lj, aj);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(v);
  REQUIRE(es.info() == Eigen::Success);
  CHECK(es.eigenvalues()(8) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("observable_variance") {
  Rng rng(2);
  // Rayleigh quotient at the top eigenvector equals e_max.
  const PureState psi = random_state(5, rng);
  const MaxEigenpair top = max_eigenpair(build_vcm(psi));
  CHECK(observable_variance(psi, top.u_max) ==
        doctest::Approx(top.e_max).epsilon(1e-9));

  // Grover ground state at s = 1/2 with M_x / sqrt(n): variance
  // = n (1/4 + O(1/sqrt(N))); dual route against the closed form.
  const int n = 10;
  const PureState gs = grover_ground_state(n, 77, 0.5);
  const AdditiveObservable mx_unit =
      AdditiveObservable::x_sum(n).scaled(1.0 / std::sqrt(double(n)));
  const double var = observable_variance(gs, mx_unit);
  CHECK(var == doctest::Approx(grover_mx_variance_analytic(n, 0.5) / n)
                   .epsilon(1e-9));
  CHECK(std::abs(var / n - 0.25) < 2.0 / std::sqrt(1024.0));

  // A basis state is an eigenstate of the Z sum: zero variance.
  const PureState w = PureState::basis_state(4, 0b0110);
  CHECK(std::abs(observable_variance(w, AdditiveObservable::z_sum(4))) <
        1e-12);
}

TEST_CASE("mean_distance") {
  const int n = 6;
  const AdditiveObservable mx = AdditiveObservable::x_sum(n);
  CHECK(mean_distance(PureState::basis_state(n, 9),
                      PureState::uniform_superposition(n),
                      mx) == doctest::Approx(double(n)).epsilon(1e-12));
  Rng rng(3);
  const PureState psi = random_state(n, rng);
  CHECK(mean_distance(psi, psi, mx) == doctest::Approx(0.0).epsilon(1e-12));

  // BV: initial vs solution configuration under A = sum a_l X(l) + X(n+1);
  // eigenvalue difference 2 sum a_l + 2.
  const int nb = 4;
  const std::uint64_t a = 0b1011;
  const InstanceSpec spec = BVSpec{nb, a};
  const AdditiveObservable pred =
      predicted_observable(spec).scaled(std::sqrt(4.0));  // unnormalize
  const PureState s0 = PureState::uniform_superposition(nb + 1);
  const double dist = mean_distance(s0, bv_minus_state(nb, a), pred);
  CHECK(dist == doctest::Approx(2.0 * 3 + 2.0).epsilon(1e-9));
}

TEST_CASE("Rayleigh consistency for random unit observables") {
  Rng rng(4);
  const PureState psi = random_state(4, rng);
  const double e_max = max_eigenpair(build_vcm(psi)).e_max;
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    AdditiveObservable a = AdditiveObservable::zero(4);
    for (auto& c : a.coeffs) c = Complex{g(rng), g(rng)};
    a = a.normalized();
    CHECK(observable_variance(psi, a) <= e_max + 1e-9);
  }
}

TEST_CASE("permutation invariance of e_max") {
  Rng rng(5);
  const PureState psi = random_state(5, rng);
  const double e_ref = max_eigenpair(build_vcm(psi)).e_max;
  std::vector<int> perm = {1, 2, 3, 4, 5};
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const double e = max_eigenpair(build_vcm(permute_sites(psi, perm))).e_max;
    CHECK(e == doctest::Approx(e_ref).epsilon(1e-9));
  }
}

TEST_CASE("VCM hermiticity, positivity, trace and e_max bounds") {
  Rng rng(6);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 4;
    const PureState psi = random_state(n, rng);
    const Vcm v = build_vcm(psi);
    CHECK((v.matrix - v.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    const Eigen::VectorXd ev = vcm_eigenvalues(v);
    CHECK(ev(0) >= -1e-9);
    CHECK(v.trace() >= 2.0 * n - 1e-9);
    CHECK(v.trace() <= 3.0 * n + 1e-9);
    const double e_max = ev(ev.size() - 1);
    CHECK(e_max >= 1.0 - 1e-9);
    CHECK(e_max <= v.trace() + 1e-9);
  }
}

TEST_CASE("all-ones J matrix spectrum (direct eigensolve, k <= 12)") {
  for (int k = 1; k <= 12; ++k) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Ones(k + 1, k + 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    REQUIRE(es.info() == Eigen::Success);
    CHECK(es.eigenvalues()(k) == doctest::Approx(k + 1.0).epsilon(1e-9));
    for (int i = 0; i < k; ++i) CHECK(std::abs(es.eigenvalues()(i)) < 1e-9);
  }
}

TEST_CASE("fit_p_e") {
  // Exact power law value = n: slope 1, p_e = 2, stderr 0.
  std::vector<ScalingRow> rows;
  for (int n : {4, 6, 8, 10}) rows.push_back({n, "x", double(n)});
  PeFit fit = fit_p_e(rows);
  CHECK(fit.p_e == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.stderr_value == doctest::Approx(0.0).epsilon(1e-12));

  // Constant value = 2: p_e = 1.
  rows.clear();
  for (int n : {4, 6, 8, 10}) rows.push_back({n, "x", 2.0});
  fit = fit_p_e(rows);
  CHECK(fit.p_e == doctest::Approx(1.0).epsilon(1e-12));

  // BV medians over sampled nonzero a, n = 8..16: dual route against the
  // closed-form e_max; the fit lands near 1.85.
  Rng rng(7);
  rows.clear();
  for (int n = 8; n <= 16; n += 2) {
    std::uniform_int_distribution<std::uint64_t> dist(1, dim_of(n) - 1);
    std::vector<double> vals;
    for (int i = 0; i < 32; ++i) vals.push_back(bv_emax_formula(n, dist(rng)));
    rows.push_back({n, "median", median(vals)});
  }
  fit = fit_p_e(rows);
  CHECK(fit.p_e > 1.7);
  CHECK(fit.p_e < 2.1);

  // Errors: nonpositive values and too-short series.
  CHECK_THROWS_AS(fit_p_e({{4, "x", 1.0}, {5, "x", 0.0}, {6, "x", 1.0}}),
                  std::domain_error);
  CHECK_THROWS_AS(fit_p_e({{4, "x", 1.0}, {5, "x", 1.0}}), std::domain_error);
}

TEST_CASE("verdict decision rule") {
  CHECK(decide_verdict(1.9, 0.05, 9) == PVerdict::two);
  CHECK(decide_verdict(1.0, 0.0, 9) == PVerdict::one);
  CHECK(decide_verdict(1.6, 0.5, 9) == PVerdict::indeterminate);
  CHECK(decide_verdict(1.4, 0.5, 9) == PVerdict::indeterminate);
}
