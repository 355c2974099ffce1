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

#include <cstdint>
#include <span>
#include <vector>

#include "macrosup/common.hpp"

namespace macrosup {

/// Local Pauli axis at a site. The three values are the complete local
/// operator basis (besides the identity) used throughout.
enum class PauliAxis : int { X = 0, Y = 1, Z = 2 };

inline constexpr PauliAxis kAllAxes[3] = {PauliAxis::X, PauliAxis::Y,
                                          PauliAxis::Z};

/// Dense complex amplitude vector over the n-qubit computational basis.
///
/// Qubit ordering convention (fixed project-wide): sites are 1-based and
/// site l = 1 is the MOST significant bit of the basis index. A basis
/// index w therefore reads, bit by bit from the top, as the tuple
/// (w_1, w_2, ..., w_n). Composite registers concatenate the same way:
/// |w> (x) |b> has index (w << width_of_b) | b.
///
/// Factories produce unit-norm states. Values returned by Hamiltonian
/// application and integrator internals are unnormalized images and say so
/// at their call sites.
class PureState {
 public:
  static PureState basis_state(int num_qubits, std::uint64_t w);
  static PureState uniform_superposition(int num_qubits);
  /// Takes ownership of `amps` (length must be 2^num_qubits) and normalizes.
  static PureState from_amplitudes(int num_qubits, std::vector<Complex> amps);
  /// Unnormalized wrapper used for operator images and integrator stages.
  static PureState raw(int num_qubits, std::vector<Complex> amps);
  /// All-zero amplitude vector (workspace).
  static PureState zeros(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return amps_.size(); }

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  const Complex& operator[](std::uint64_t i) const { return amps_[i]; }
  Complex& operator[](std::uint64_t i) { return amps_[i]; }

  double norm() const;
  void normalize();

  /// Bit position (from the LSB) of 1-based site `l`; site 1 is the MSB.
  int bit_index(int site) const { return num_qubits_ - site; }
  /// Value of site `l` in basis index `w` under the ordering convention.
  int site_bit(std::uint64_t w, int site) const {
    return static_cast<int>((w >> bit_index(site)) & 1u);
  }

  void check_site(int site) const;

 private:
  PureState(int num_qubits, std::vector<Complex> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  int num_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// Checked register width: throws std::domain_error outside [1, kMaxQubits].
void check_num_qubits(int num_qubits);

}  // namespace macrosup
