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

#include "macrosup/algos.hpp"
#include "macrosup/pauli_kernels.hpp"
#include "macrosup/vcm.hpp"

using namespace macrosup;

namespace {

// Singular values of the (qubit 1 | rest) bipartition.
Eigen::VectorXd first_cut_singular_values(const PureState& psi) {
  const int n = psi.num_qubits();
  const std::uint64_t rest = dim_of(n - 1);
  Eigen::MatrixXcd m(2, rest);
  for (std::uint64_t w = 0; w < psi.dim(); ++w) {
    m(w >> (n - 1), w & (rest - 1)) = psi[w];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues();
}

}  // namespace

TEST_CASE("beta_f and the s = 1 ground state") {
  // mu_f = 1 (constant): |0>_1 (x) |+>^{n-1}.
  const int n = 5;
  const PureState b1 = dj_beta_f(n, 1);
  const PureState gs1 = dj_ground_state(n, 1, 1.0);
  CHECK(std::abs(inner_product(b1, gs1)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pauli_expectation(gs1, 1, PauliAxis::Z) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (int l = 2; l <= n; ++l) {
    CHECK(pauli_expectation(gs1, l, PauliAxis::X) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  // s = 0: the driver ground state |phi> for either mu_f.
  for (int mu : {0, 1}) {
    CHECK(std::abs(inner_product(dj_ground_state(n, mu, 0.0),
                                 PureState::uniform_superposition(n))) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("e_max = 2 for all s: the p = 1 family") {
  const int n = 6;
  for (int mu : {0, 1}) {
    for (int i = 0; i <= 20; ++i) {
      const double s = i / 20.0;
      const double e =
          max_eigenpair(build_vcm(dj_ground_state(n, mu, s))).e_max;
      CHECK(e == doctest::Approx(2.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("Schmidt rank 1 across the first-qubit cut for all s") {
  const int n = 6;
  for (int mu : {0, 1}) {
    for (int i = 0; i <= 20; ++i) {
      const double s = i / 20.0;
      const Eigen::VectorXd sv =
          first_cut_singular_values(dj_ground_state(n, mu, s));
      CHECK(sv(1) < 1e-10);
    }
  }
}

TEST_CASE("ground-state residual against hamiltonian_apply") {
  for (int n : {2, 5, 8}) {
    for (int mu : {0, 1}) {
      const InstanceSpec spec = DJSpec{n, mu};
      for (int i = 0; i <= 20; ++i) {
        const double s = i / 20.0;
        const PureState gs = dj_ground_state(n, mu, s);
        PureState img = hamiltonian_apply(spec, s, gs);
        const double energy = inner_product(gs, img).real();
        add_scaled(img, -energy, gs);
        CHECK(img.norm() <= 1e-8);
      }
    }
  }
}

TEST_CASE("dense diagonalization confirms the 2x2 effective gap") {
  const int n = 4;
  for (int mu : {0, 1}) {
    const InstanceSpec spec = DJSpec{n, mu};
    for (double s : {0.15, 0.5, 0.85}) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
          dense_hamiltonian(spec, s));
      REQUIRE(es.info() == Eigen::Success);
      const double gap = es.eigenvalues()(1) - es.eigenvalues()(0);
      CHECK(gap == doctest::Approx(dj_gap(s)).epsilon(1e-9));
    }
  }
}

TEST_CASE("mu_f from explicit oracles") {
  const int n = 4;
  std::vector<int> constant(dim_of(n), 0);
  CHECK(dj_mu_from_oracle(n, constant) == doctest::Approx(1.0));
  // Balanced oracle: f(w) = first bit of w.
  std::vector<int> balanced(dim_of(n));
  for (std::uint64_t w = 0; w < dim_of(n); ++w) {
    balanced[w] = static_cast<int>((w >> (n - 1)) & 1u);
  }
  CHECK(dj_mu_from_oracle(n, balanced) == doctest::Approx(0.0));
  CHECK_THROWS_AS(dj_mu_from_oracle(n, std::vector<int>(3, 0)),
                  std::domain_error);
}
