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

#include "macrosup/pure_state.hpp"

#include <cmath>

#include "macrosup/pauli_kernels.hpp"

namespace macrosup {

void check_num_qubits(int num_qubits) {
  if (num_qubits < 1) {
    throw std::domain_error("num_qubits must be >= 1, got " +
                            std::to_string(num_qubits));
  }
  if (num_qubits > kMaxQubits) {
    throw std::domain_error("num_qubits " + std::to_string(num_qubits) +
                            " exceeds the configured cap of " +
                            std::to_string(kMaxQubits));
  }
}

void PureState::check_site(int site) const {
  if (site < 1 || site > num_qubits_) {
    throw std::domain_error("site " + std::to_string(site) +
                            " out of range [1, " +
                            std::to_string(num_qubits_) + "]");
  }
}

PureState PureState::basis_state(int num_qubits, std::uint64_t w) {
  check_num_qubits(num_qubits);
  if (w >= dim_of(num_qubits)) {
    throw std::domain_error("basis index " + std::to_string(w) +
                            " out of range for " + std::to_string(num_qubits) +
                            " qubits");
  }
  std::vector<Complex> amps(dim_of(num_qubits), Complex{0.0, 0.0});
  amps[w] = Complex{1.0, 0.0};
  return PureState(num_qubits, std::move(amps));
}

PureState PureState::uniform_superposition(int num_qubits) {
  check_num_qubits(num_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(dim_of(num_qubits)));
  std::vector<Complex> amps(dim_of(num_qubits), Complex{a, 0.0});
  return PureState(num_qubits, std::move(amps));
}

PureState PureState::from_amplitudes(int num_qubits,
                                     std::vector<Complex> amps) {
  check_num_qubits(num_qubits);
  if (amps.size() != dim_of(num_qubits)) {
    throw std::domain_error("amplitude vector length " +
                            std::to_string(amps.size()) +
                            " does not match 2^" + std::to_string(num_qubits));
  }
  PureState s(num_qubits, std::move(amps));
  s.normalize();
  return s;
}

PureState PureState::raw(int num_qubits, std::vector<Complex> amps) {
  check_num_qubits(num_qubits);
  if (amps.size() != dim_of(num_qubits)) {
    throw std::domain_error("amplitude vector length does not match 2^n");
  }
  return PureState(num_qubits, std::move(amps));
}

PureState PureState::zeros(int num_qubits) {
  check_num_qubits(num_qubits);
  return PureState(num_qubits,
                   std::vector<Complex>(dim_of(num_qubits), Complex{0, 0}));
}

double PureState::norm() const { return std::sqrt(det_sum_norm2(amps_)); }

void PureState::normalize() {
  const double n = norm();
  if (n < 1e-300) {
    throw NumericError("cannot normalize a (numerically) zero state");
  }
  const double inv = 1.0 / n;
  for (auto& a : amps_) a *= inv;
}

}  // namespace macrosup
