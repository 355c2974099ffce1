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

#include <bit>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace macrosup {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

// Hard cap on register width; larger requests fail fast.
inline constexpr int kMaxQubits = 24;

/// Numerical failure (eigensolver non-convergence, norm drift, ...).
/// Maps to CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested computation exceeds a configured capability (dimension caps).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Invalid run configuration. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure. Maps to CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline int popcount64(std::uint64_t x) {
  return std::popcount(x);
}

/// Bitwise inner product modulo 2.
inline int parity_dot(std::uint64_t a, std::uint64_t b) {
  return popcount64(a & b) & 1;
}

inline std::uint64_t dim_of(int num_qubits) {
  return std::uint64_t{1} << num_qubits;
}

// The std <random> distributions are implementation-defined; these two
// samplers consume the (standardized, bit-exact) mt19937_64 stream
// directly so a recorded seed reproduces runs across toolchains.

/// Uniform integer in [0, bound) by masked rejection.
inline std::uint64_t uniform_u64_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("uniform_u64_below: empty range");
  if ((bound & (bound - 1)) == 0) return rng() & (bound - 1);
  const int bits = 64 - std::countl_zero(bound - 1);
  const std::uint64_t mask =
      bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v < bound) return v;
  }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace macrosup
