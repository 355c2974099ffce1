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

#include <cmath>

#include "macrosup/algos.hpp"

namespace macrosup {

namespace {

// Ground eigenvector of the 2x2 effective Hamiltonian in the orthonormal
// basis {|beta_f>, |beta_f_perp>}, where |phi> = (|beta_f> + |beta_f_perp>)
// / sqrt(2) (uses <phi|beta_f> = 1/sqrt(2), independent of mu_f and n).
// H2 = s * diag(0, 1) + (1-s)/2 * [[1, -1], [-1, 1]].
struct Dj2x2 {
  double g0, g1;  // ground eigenvector components, both nonnegative
  double gap;     // E1 - E0
};

Dj2x2 dj_effective(double s) {
  if (s < 0.0 || s > 1.0) throw std::domain_error("s must be in [0, 1]");
  const double h00 = (1.0 - s) * 0.5;
  const double h01 = -(1.0 - s) * 0.5;
  const double h11 = s + (1.0 - s) * 0.5;
  // trace = 1, so E0 = (1 - gap)/2 with gap = sqrt((h11-h00)^2 + 4 h01^2).
  const double gap =
      std::sqrt((h11 - h00) * (h11 - h00) + 4.0 * h01 * h01);
  const double e0 = 0.5 * (1.0 - gap);
  // Eigenvector of the smaller eigenvalue; off-diagonal is negative, so
  // both components share a sign.
  double g0, g1;
  if (std::abs(h01) < 1e-300) {
    g0 = h00 <= h11 ? 1.0 : 0.0;
    g1 = 1.0 - g0;
  } else {
    g0 = -h01;
    g1 = h00 - e0;
    const double norm = std::sqrt(g0 * g0 + g1 * g1);
    g0 /= norm;
    g1 /= norm;
    if (g0 < 0) {
      g0 = -g0;
      g1 = -g1;
    }
  }
  return {g0, g1, gap};
}

}  // namespace

PureState dj_beta_f(int n, int mu_f) {
  validate(DJSpec{n, mu_f});
  const std::uint64_t N = dim_of(n);
  const double rest = 1.0 / std::sqrt(static_cast<double>(N / 2));
  std::vector<Complex> amps(N, Complex{0, 0});
  for (std::uint64_t w = 0; w < N; ++w) {
    const int b1 = static_cast<int>((w >> (n - 1)) & 1u);  // site 1 = MSB
    const double c = (b1 == 0) ? static_cast<double>(mu_f)
                               : static_cast<double>(1 - mu_f);
    if (n == 1) {
      amps[w] = c;
    } else {
      amps[w] = c * rest;
    }
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

PureState dj_ground_state(int n, int mu_f, double s) {
  validate(DJSpec{n, mu_f});
  const Dj2x2 eff = dj_effective(s);
  // |beta_f_perp> = sqrt(2)|phi> - |beta_f> = [(1-mu)|0> + mu|1>] (x) |+>...
  const double mu = static_cast<double>(mu_f);
  const double c0 = eff.g0 * mu + eff.g1 * (1.0 - mu);
  const double c1 = eff.g0 * (1.0 - mu) + eff.g1 * mu;
  const std::uint64_t N = dim_of(n);
  const double rest = std::pow(0.5, 0.5 * (n - 1));
  std::vector<Complex> amps(N);
  for (std::uint64_t w = 0; w < N; ++w) {
    const int b1 = static_cast<int>((w >> (n - 1)) & 1u);
    amps[w] = (b1 == 0 ? c0 : c1) * rest;
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

double dj_gap(double s) { return dj_effective(s).gap; }

double dj_mu_from_oracle(int n, const std::vector<int>& f_values) {
  if (f_values.size() != dim_of(n)) {
    throw std::domain_error("oracle table length must be 2^n");
  }
  long long sum = 0;
  for (int f : f_values) {
    if (f != 0 && f != 1) throw std::domain_error("f values must be bits");
    sum += f == 0 ? 1 : -1;
  }
  return std::abs(static_cast<double>(sum)) /
         static_cast<double>(dim_of(n));
}

}  // namespace macrosup
