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

#include <bit>
#include <cmath>

#include "macrosup/algos.hpp"

namespace macrosup {

SimonOracle::SimonOracle(int n, std::uint64_t a) : n_(n), a_(a) {
  validate(SimonSpec{n, a});
  pivot_ = 63 - std::countl_zero(a);
}

std::uint64_t SimonOracle::g(std::uint64_t w) const {
  const std::uint64_t r = std::min(w, w ^ a_);
  // r always has bit `pivot_` clear (the two coset members differ there and
  // r is the smaller); delete that bit.
  const std::uint64_t low = r & ((std::uint64_t{1} << pivot_) - 1);
  return ((r >> (pivot_ + 1)) << pivot_) | low;
}

PureState simon_state_s1(int n, std::uint64_t a) {
  const SimonOracle oracle(n, a);
  const std::uint64_t N = dim_of(n);
  std::vector<Complex> amps(dim_of(2 * n - 1), Complex{0, 0});
  const double amp = 1.0 / std::sqrt(static_cast<double>(N));
  for (std::uint64_t w = 0; w < N; ++w) {
    amps[(w << (n - 1)) | oracle.g(w)] = amp;
  }
  return PureState::from_amplitudes(2 * n - 1, std::move(amps));
}

PureState simon_post_state(int n, std::uint64_t a, std::uint64_t w_star) {
  const SimonOracle oracle(n, a);
  if (w_star >= dim_of(n)) throw std::domain_error("w* out of range");
  const std::uint64_t g = oracle.g(w_star);
  std::vector<Complex> amps(dim_of(2 * n - 1), Complex{0, 0});
  const double amp = 1.0 / std::sqrt(2.0);
  amps[(w_star << (n - 1)) | g] = amp;
  amps[((w_star ^ a) << (n - 1)) | g] = amp;
  return PureState::from_amplitudes(2 * n - 1, std::move(amps));
}

namespace {

std::array<double, 2> simon_sector_spinor(int gbit, double s) {
  const double hx = 1.0 - s;
  const double hz = (gbit == 0 ? 1.0 : -1.0) * s;
  const double h = std::sqrt(hx * hx + hz * hz);
  const double c = hz / h;
  return {std::sqrt(0.5 * (1.0 + c)), std::sqrt(0.5 * (1.0 - c))};
}

}  // namespace

double simon_gap(double s) {
  return std::sqrt(s * s + (1.0 - s) * (1.0 - s));
}

PureState simon_ground_state(int n, std::uint64_t a, double s) {
  const SimonOracle oracle(n, a);
  if (s < 0.0 || s > 1.0) throw std::domain_error("s must be in [0, 1]");
  const std::uint64_t N = dim_of(n);
  const int m = n - 1;  // second-register width
  const auto chi0 = simon_sector_spinor(0, s);
  const auto chi1 = simon_sector_spinor(1, s);
  const double amp = 1.0 / std::sqrt(static_cast<double>(N));
  std::vector<Complex> amps(dim_of(2 * n - 1));
  for (std::uint64_t w = 0; w < N; ++w) {
    const std::uint64_t gw = oracle.g(w);
    for (std::uint64_t b = 0; b < dim_of(m); ++b) {
      double prod = amp;
      for (int bit = 0; bit < m; ++bit) {
        const int gbit = static_cast<int>((gw >> bit) & 1u);
        const int bbit = static_cast<int>((b >> bit) & 1u);
        prod *= (gbit == 0 ? chi0 : chi1)[bbit];
      }
      amps[(w << m) | b] = prod;
    }
  }
  return PureState::from_amplitudes(2 * n - 1, std::move(amps));
}

double simon_emax_formula(int n, std::uint64_t a) {
  validate(SimonSpec{n, a});
  const int k = popcount64(a);
  return k == 1 ? 2.0 : static_cast<double>(k);
}

SimonRecovery simon_recover(int n, const std::vector<std::uint64_t>& samples) {
  // Row-reduce the sample set over GF(2), pivots at the highest set bit.
  std::vector<std::uint64_t> rows;  // reduced echelon rows
  for (std::uint64_t x : samples) {
    std::uint64_t v = x & (dim_of(n) - 1);
    for (std::uint64_t r : rows) {
      const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(r));
      if (v & pivot) v ^= r;
    }
    if (v == 0) continue;
    // Back-eliminate the new pivot from existing rows (Gauss-Jordan).
    const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(v));
    for (auto& r : rows) {
      if (r & pivot) r ^= v;
    }
    rows.push_back(v);
  }

  const int rank = static_cast<int>(rows.size());
  if (rank >= n) {
    throw NumericError(
        "simon_recover: samples have full rank; every x* must be orthogonal "
        "to a nonzero a, so the oracle promise was violated");
  }
  if (rank < n - 1) return {false, 0};

  // Unique free column -> unique nonzero null vector.
  std::uint64_t pivot_mask = 0;
  for (std::uint64_t r : rows) {
    pivot_mask |= std::uint64_t{1} << (63 - std::countl_zero(r));
  }
  const std::uint64_t free_mask = (dim_of(n) - 1) & ~pivot_mask;
  std::uint64_t a = free_mask;  // free variable set to 1
  for (std::uint64_t r : rows) {
    if (r & free_mask) {
      a |= std::uint64_t{1} << (63 - std::countl_zero(r));
    }
  }
  return {true, a};
}

}  // namespace macrosup
