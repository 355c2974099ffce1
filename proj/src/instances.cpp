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

#include "macrosup/instances.hpp"

#include "macrosup/pure_state.hpp"

namespace macrosup {

namespace {

void check_bits(int n, std::uint64_t x, const char* what) {
  if (x >= dim_of(n)) {
    throw std::domain_error(std::string(what) + " out of range for n = " +
                            std::to_string(n));
  }
}

}  // namespace

void validate(const InstanceSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GroverSpec>) {
          check_num_qubits(s.n);
          check_bits(s.n, s.w_star, "w*");
        } else if constexpr (std::is_same_v<T, DJSpec>) {
          check_num_qubits(s.n);
          if (s.mu_f != 0 && s.mu_f != 1) {
            throw std::domain_error("mu_f must be 0 or 1");
          }
        } else if constexpr (std::is_same_v<T, BVSpec>) {
          check_num_qubits(s.n + 1);
          check_bits(s.n, s.a, "a");
        } else {
          if (s.n < 2) throw std::domain_error("Simon requires n >= 2");
          check_num_qubits(2 * s.n - 1);
          check_bits(s.n, s.a, "a");
          if (s.a == 0) {
            throw std::domain_error(
                "a = 0 is not a Simon instance (g would not be 2-to-1)");
          }
        }
      },
      spec);
}

int total_qubits(const InstanceSpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GroverSpec>) return s.n;
        else if constexpr (std::is_same_v<T, DJSpec>) return s.n;
        else if constexpr (std::is_same_v<T, BVSpec>) return s.n + 1;
        else return 2 * s.n - 1;
      },
      spec);
}

std::string family_of(const InstanceSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GroverSpec>) return "grover";
        else if constexpr (std::is_same_v<T, DJSpec>) return "dj";
        else if constexpr (std::is_same_v<T, BVSpec>) return "bv";
        else return "simon";
      },
      spec);
}

std::string label_of(const InstanceSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GroverSpec>)
          return std::to_string(s.w_star);
        else if constexpr (std::is_same_v<T, DJSpec>)
          return s.mu_f ? "constant" : "balanced";
        else
          return std::to_string(s.a);
      },
      spec);
}

}  // namespace macrosup
