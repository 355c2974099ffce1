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

#include <array>
#include <cmath>

#include "macrosup/algos.hpp"

namespace macrosup {

namespace {

// Ground spinor of the single-ancilla sector Hamiltonian
// h_f(s) = (1/2)[1 - (1-s) sigma_x - (-1)^f s sigma_z], written in the
// z basis. The Bloch field ((1-s), 0, +-s) never vanishes on [0, 1], so
// this is the unique continuous continuation from |+> at s = 0.
std::array<double, 2> bv_sector_spinor(int f, double s) {
  const double hx = 1.0 - s;
  const double hz = (f == 0 ? 1.0 : -1.0) * s;
  const double h = std::sqrt(hx * hx + hz * hz);
  const double c = hz / h;
  return {std::sqrt(0.5 * (1.0 + c)), std::sqrt(0.5 * (1.0 - c))};
}

}  // namespace

double bv_gap(double s) {
  return std::sqrt(s * s + (1.0 - s) * (1.0 - s));
}

PureState bv_state_s1(int n, std::uint64_t a) {
  validate(BVSpec{n, a});
  const std::uint64_t N = dim_of(n);
  std::vector<Complex> amps(2 * N, Complex{0, 0});
  const double amp = 1.0 / std::sqrt(static_cast<double>(N));
  for (std::uint64_t w = 0; w < N; ++w) {
    amps[(w << 1) | static_cast<std::uint64_t>(bv_f(a, w))] = amp;
  }
  return PureState::from_amplitudes(n + 1, std::move(amps));
}

PureState bv_minus_state(int n, std::uint64_t a) {
  validate(BVSpec{n, a});
  const std::uint64_t N = dim_of(n);
  std::vector<Complex> amps(2 * N, Complex{0, 0});
  const double amp = 1.0 / std::sqrt(static_cast<double>(2 * N));
  for (std::uint64_t w = 0; w < N; ++w) {
    // (x)_l (|0> + (-1)^{a_l}|1>)/sqrt(2): sign = parity of a over the
    // sites where w has a 1.
    const double sign_w = parity_dot(a, w) ? -1.0 : 1.0;
    amps[w << 1] += sign_w * amp;
    amps[(w << 1) | 1u] -= sign_w * amp;  // ancilla |-> component
  }
  return PureState::from_amplitudes(n + 1, std::move(amps));
}

PureState bv_ground_state(int n, std::uint64_t a, double s) {
  validate(BVSpec{n, a});
  if (s < 0.0 || s > 1.0) throw std::domain_error("s must be in [0, 1]");
  const std::uint64_t N = dim_of(n);
  const auto chi0 = bv_sector_spinor(0, s);
  const auto chi1 = bv_sector_spinor(1, s);
  const double amp = 1.0 / std::sqrt(static_cast<double>(N));
  std::vector<Complex> amps(2 * N);
  for (std::uint64_t w = 0; w < N; ++w) {
    const auto& chi = bv_f(a, w) == 0 ? chi0 : chi1;
    amps[w << 1] = amp * chi[0];
    amps[(w << 1) | 1u] = amp * chi[1];
  }
  return PureState::from_amplitudes(n + 1, std::move(amps));
}

double bv_emax_formula(int n, std::uint64_t a) {
  validate(BVSpec{n, a});
  if (a == 0) return 2.0;
  return 1.0 + static_cast<double>(popcount64(a));
}

}  // namespace macrosup
