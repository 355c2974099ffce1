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

#pragma once

#include <vector>

#include "macrosup/pure_state.hpp"

namespace macrosup {

/// One projective measurement: sampled value, its Born probability, and the
/// normalized post-measurement state.
struct MeasurementOutcome {
  std::int64_t value = 0;  // +-1 for Pauli measurements, bit-string otherwise
  double probability = 0.0;
  PureState post_state;
};

/// Measures sigma_x(site). value is +1 or -1.
MeasurementOutcome measure_pauli_x(const PureState& psi, int site, Rng& rng);

/// Computational-basis measurement of the listed sites (must be distinct).
/// The outcome integer packs the measured bits with the FIRST listed site as
/// the most significant bit, matching the global site-1-is-MSB convention.
MeasurementOutcome measure_subsystem_z(const PureState& psi,
                                       const std::vector<int>& sites,
                                       Rng& rng);

}  // namespace macrosup
