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

double grover_gap(int n, double s) {
  const double N = static_cast<double>(dim_of(n));
  const double u = 2.0 * s - 1.0;
  // 1 - 4s(1-s)(N-1)/N == (1 + (N-1)u^2)/N exactly; the right form has no
  // cancellation near s = 1/2.
  return std::sqrt((1.0 + (N - 1.0) * u * u) / N);
}

GroverAnalytic GroverAnalytic::at(int n, double s) {
  if (s < 0.0 || s > 1.0) throw std::domain_error("s must be in [0, 1]");
  const double N = static_cast<double>(dim_of(n));
  const double dE = grover_gap(n, s);

  const double sin_t = 2.0 * (1.0 - s) * std::sqrt(N - 1.0) / (dE * N);
  // 1 - 2(1-s)(N-1)/N == [N(2s-1) + 2(1-s)]/N, grouped to avoid the large
  // cancellation near s = 1/2.
  const double cos_t = -(N * (2.0 * s - 1.0) + 2.0 * (1.0 - s)) / (N * dE);
  const double theta = std::atan2(sin_t, cos_t);

  const double sin_t0 = 2.0 * std::sqrt(N - 1.0) / N;
  const double cos_t0 = (N - 2.0) / N;
  const double theta0 = std::atan2(sin_t0, cos_t0);

  GroverAnalytic out;
  out.s = s;
  out.theta_s = theta;
  out.a_s = std::sin(theta / 2) - std::cos(theta / 2) * std::tan(theta0 / 2);
  out.b_s = std::cos(theta / 2) / std::cos(theta0 / 2);
  out.gap = dE;
  return out;
}

PureState grover_ground_state(int n, std::uint64_t w_star, double s) {
  validate(GroverSpec{n, w_star});
  const GroverAnalytic g = GroverAnalytic::at(n, s);
  const std::uint64_t N = dim_of(n);
  const double phi_amp = g.b_s / std::sqrt(static_cast<double>(N));
  std::vector<Complex> amps(N, Complex{phi_amp, 0.0});
  amps[w_star] += g.a_s;
  return PureState::from_amplitudes(n, std::move(amps));
}

double grover_mx_variance_analytic(int n, double s) {
  const GroverAnalytic g = GroverAnalytic::at(n, s);
  const double N = static_cast<double>(dim_of(n));
  const double a = g.a_s, b = g.b_s;
  const double nn = static_cast<double>(n);
  return b * b * (1.0 - b * b) * nn * nn + a * a * nn +
         2.0 * a * b * (1.0 - 2.0 * b * b) * nn * nn / std::sqrt(N) -
         4.0 * a * a * b * b * nn * nn / N;
}

double grover_mx_prefactor_analytic(int n, double s) {
  const GroverAnalytic g = GroverAnalytic::at(n, s);
  const double nn = static_cast<double>(n);
  return (grover_mx_variance_analytic(n, s) - g.a_s * g.a_s * nn) / (nn * nn);
}

}  // namespace macrosup
