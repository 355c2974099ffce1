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
#include <string>
#include <variant>

#include "macrosup/common.hpp"

namespace macrosup {

/// Search problem with a single marked item w*. n register qubits.
struct GroverSpec {
  int n = 1;
  std::uint64_t w_star = 0;
};

/// Constant-vs-balanced promise problem; states depend on f only through
/// mu_f (1 constant, 0 balanced). n register qubits.
struct DJSpec {
  int n = 1;
  int mu_f = 1;
};

/// Hidden linear string a, f_a(w) = a.w mod 2. n + 1 qubits total.
struct BVSpec {
  int n = 1;
  std::uint64_t a = 0;
};

/// Hidden xor mask a != 0 with 2-to-1 oracle g. 2n - 1 qubits total.
struct SimonSpec {
  int n = 2;
  std::uint64_t a = 1;
};

using InstanceSpec = std::variant<GroverSpec, DJSpec, BVSpec, SimonSpec>;

/// Throws std::domain_error on malformed instances (bit-strings out of
/// range, Simon a = 0, ...).
void validate(const InstanceSpec& spec);

/// Total qubit count of the register the algorithm acts on.
int total_qubits(const InstanceSpec& spec);

std::string family_of(const InstanceSpec& spec);
std::string label_of(const InstanceSpec& spec);

}  // namespace macrosup
