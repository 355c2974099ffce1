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

#include "macrosup/measure.hpp"

#include <algorithm>
#include <cmath>

namespace macrosup {

MeasurementOutcome measure_pauli_x(const PureState& psi, int site, Rng& rng) {
  psi.check_site(site);
  const std::uint64_t mask = std::uint64_t{1} << psi.bit_index(site);
  const auto a = psi.amplitudes();

  // P(+1) = || (1 + sigma_x)/2 |psi> ||^2, accumulated pairwise.
  double p_plus = 0.0;
  for (std::uint64_t w = 0; w < a.size(); ++w) {
    if (w & mask) continue;
    p_plus += 0.5 * std::norm(a[w] + a[w | mask]);
  }
  p_plus = std::clamp(p_plus, 0.0, 1.0);

  const bool plus = uniform_unit(rng) < p_plus;
  const double sign = plus ? 1.0 : -1.0;
  const double prob = plus ? p_plus : 1.0 - p_plus;

  std::vector<Complex> out(a.size());
  for (std::uint64_t w = 0; w < a.size(); ++w) {
    if (w & mask) continue;
    const Complex proj = 0.5 * (a[w] + sign * a[w | mask]);
    out[w] = proj;
    out[w | mask] = sign * proj;
  }
  MeasurementOutcome result{plus ? +1 : -1, prob,
                            PureState::from_amplitudes(psi.num_qubits(),
                                                       std::move(out))};
  return result;
}

MeasurementOutcome measure_subsystem_z(const PureState& psi,
                                       const std::vector<int>& sites,
                                       Rng& rng) {
  if (sites.empty()) {
    throw std::domain_error("measure_subsystem_z: empty site list");
  }
  for (int s : sites) psi.check_site(s);
  std::vector<int> sorted = sites;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::domain_error("measure_subsystem_z: duplicate sites");
  }

  const int k = static_cast<int>(sites.size());
  const std::uint64_t num_outcomes = std::uint64_t{1} << k;
  const auto a = psi.amplitudes();

  auto outcome_of = [&](std::uint64_t w) {
    std::uint64_t o = 0;
    for (int j = 0; j < k; ++j) {
      o |= static_cast<std::uint64_t>(psi.site_bit(w, sites[j]))
           << (k - 1 - j);
    }
    return o;
  };

  std::vector<double> prob(num_outcomes, 0.0);
  for (std::uint64_t w = 0; w < a.size(); ++w) {
    prob[outcome_of(w)] += std::norm(a[w]);
  }

  const double u = uniform_unit(rng);
  double cum = 0.0;
  std::uint64_t picked = num_outcomes - 1;
  for (std::uint64_t o = 0; o < num_outcomes; ++o) {
    cum += prob[o];
    if (u < cum) {
      picked = o;
      break;
    }
  }
  while (prob[picked] <= 0.0) --picked;  // guard against rounding at u ~ 1

  std::vector<Complex> out(a.size(), Complex{0, 0});
  for (std::uint64_t w = 0; w < a.size(); ++w) {
    if (outcome_of(w) == picked) out[w] = a[w];
  }
  return MeasurementOutcome{
      static_cast<std::int64_t>(picked), prob[picked],
      PureState::from_amplitudes(psi.num_qubits(), std::move(out))};
}

}  // namespace macrosup
