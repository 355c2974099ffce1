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

// Compares the OpenMP kernels against the serial reference implementations
// and reports timings plus the largest numerical deviation.

#include <chrono>
#include <cstdio>
#include <functional>

#include "macrosup/pauli_kernels.hpp"
#include "macrosup/vcm.hpp"

namespace {

using namespace macrosup;
using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

PureState random_state(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> amps(dim_of(n));
  for (auto& a : amps) a = Complex{g(rng), g(rng)};
  return PureState::from_amplitudes(n, std::move(amps));
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 18;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 5;
  Rng rng(12345);
  const PureState psi = random_state(n, rng);

  std::printf("kernel benchmarks, n = %d qubits (dim %llu), %d reps\n", n,
              static_cast<unsigned long long>(dim_of(n)), reps);
  std::printf("%-24s %12s %12s %10s %12s\n", "kernel", "serial[ms]",
              "parallel[ms]", "speedup", "max |diff|");

  {
    const double ts =
        time_ms([&] { serial::pauli_apply(psi, 2, PauliAxis::Y); }, reps);
    const double tp = time_ms([&] { pauli_apply(psi, 2, PauliAxis::Y); }, reps);
    const PureState a = serial::pauli_apply(psi, 2, PauliAxis::Y);
    const PureState b = pauli_apply(psi, 2, PauliAxis::Y);
    double diff = 0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
      diff = std::max(diff, std::abs(a[i] - b[i]));
    }
    std::printf("%-24s %12.3f %12.3f %9.2fx %12.3e\n", "pauli_apply(Y)", ts,
                tp, ts / tp, diff);
  }
  {
    const double ts = time_ms(
        [&] { serial::pauli_expectation(psi, 1, PauliAxis::X); }, reps);
    const double tp =
        time_ms([&] { pauli_expectation(psi, 1, PauliAxis::X); }, reps);
    const double diff = std::abs(serial::pauli_expectation(psi, 1, PauliAxis::X) -
                                 pauli_expectation(psi, 1, PauliAxis::X));
    std::printf("%-24s %12.3f %12.3f %9.2fx %12.3e\n", "pauli_expectation(X)",
                ts, tp, ts / tp, diff);
  }
  {
    const double ts = time_ms(
        [&] { serial::pauli_correlation(psi, 1, PauliAxis::X, n, PauliAxis::Z); },
        reps);
    const double tp = time_ms(
        [&] { pauli_correlation(psi, 1, PauliAxis::X, n, PauliAxis::Z); },
        reps);
    const double diff =
        std::abs(serial::pauli_correlation(psi, 1, PauliAxis::X, n, PauliAxis::Z) -
                 pauli_correlation(psi, 1, PauliAxis::X, n, PauliAxis::Z));
    std::printf("%-24s %12.3f %12.3f %9.2fx %12.3e\n", "pauli_correlation",
                ts, tp, ts / tp, diff);
  }
  {
    const double ts = time_ms([&] { serial::inner_product(psi, psi); }, reps);
    const double tp = time_ms([&] { inner_product(psi, psi); }, reps);
    const double diff =
        std::abs(serial::inner_product(psi, psi) - inner_product(psi, psi));
    std::printf("%-24s %12.3f %12.3f %9.2fx %12.3e\n", "inner_product", ts,
                tp, ts / tp, diff);
  }
  {
    // VCM on a smaller register; the pair loop dominates.
    const int nv = std::min(n, 12);
    const PureState psv = random_state(nv, rng);
    const double tp = time_ms([&] { build_vcm(psv); }, std::max(1, reps / 2));
    std::printf("%-24s %12s %12.3f %10s %12s\n",
                ("build_vcm(n=" + std::to_string(nv) + ")").c_str(), "-", tp,
                "-", "-");
  }
  return 0;
}
