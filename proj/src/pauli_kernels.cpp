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

#include "macrosup/pauli_kernels.hpp"

#include <cstdint>

namespace macrosup {

namespace {

// A single-site Pauli as an index map plus a bit-dependent phase:
// (sigma psi)_w = phase[bit(w)] * psi_{w ^ mask}.
struct PauliOp {
  std::uint64_t mask;
  Complex phase0;
  Complex phase1;
  std::uint64_t bit_mask;

  Complex phase(std::uint64_t w) const {
    return (w & bit_mask) ? phase1 : phase0;
  }
};

PauliOp make_op(const PureState& psi, int site, PauliAxis axis) {
  psi.check_site(site);
  const std::uint64_t b = std::uint64_t{1} << psi.bit_index(site);
  switch (axis) {
    case PauliAxis::X:
      return {b, Complex{1, 0}, Complex{1, 0}, b};
    case PauliAxis::Y:
      return {b, Complex{0, -1}, Complex{0, 1}, b};
    case PauliAxis::Z:
    default:
      return {0, Complex{1, 0}, Complex{-1, 0}, b};
  }
}

constexpr std::int64_t kChunks = 64;

}  // namespace

PureState pauli_apply(const PureState& psi, int site, PauliAxis axis) {
  const PauliOp op = make_op(psi, site, axis);
  const auto in = psi.amplitudes();
  std::vector<Complex> out(in.size());
  const std::int64_t n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t w = static_cast<std::uint64_t>(i);
    out[w] = op.phase(w) * in[w ^ op.mask];
  }
  return PureState::raw(psi.num_qubits(), std::move(out));
}

double det_sum_norm2(std::span<const Complex> v) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  const std::int64_t chunks = n < kChunks ? 1 : kChunks;
  double partial[kChunks] = {};
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * n / chunks;
    const std::int64_t hi = (c + 1) * n / chunks;
    double acc = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) acc += std::norm(v[i]);
    partial[c] = acc;
  }
  double total = 0.0;
  for (std::int64_t c = 0; c < chunks; ++c) total += partial[c];
  return total;
}

Complex det_sum_dot(std::span<const Complex> a, std::span<const Complex> b) {
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t chunks = n < kChunks ? 1 : kChunks;
  Complex partial[kChunks] = {};
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * n / chunks;
    const std::int64_t hi = (c + 1) * n / chunks;
    Complex acc{0, 0};
    for (std::int64_t i = lo; i < hi; ++i) acc += std::conj(a[i]) * b[i];
    partial[c] = acc;
  }
  Complex total{0, 0};
  for (std::int64_t c = 0; c < chunks; ++c) total += partial[c];
  return total;
}

double pauli_expectation(const PureState& psi, int site, PauliAxis axis) {
  const PauliOp op = make_op(psi, site, axis);
  const auto a = psi.amplitudes();
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t chunks = n < kChunks ? 1 : kChunks;
  double partial[kChunks] = {};
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * n / chunks;
    const std::int64_t hi = (c + 1) * n / chunks;
    double acc = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) {
      const std::uint64_t w = static_cast<std::uint64_t>(i);
      acc += (std::conj(a[w]) * op.phase(w) * a[w ^ op.mask]).real();
    }
    partial[c] = acc;
  }
  double total = 0.0;
  for (std::int64_t c = 0; c < chunks; ++c) total += partial[c];
  return total;
}

Complex pauli_correlation(const PureState& psi, int l, PauliAxis axis, int l2,
                          PauliAxis axis2) {
  // <psi| s1 s2 |psi> = <s1 psi | s2 psi>, fused: both factors are phased
  // gathers of the same amplitude array.
  const PauliOp o1 = make_op(psi, l, axis);
  const PauliOp o2 = make_op(psi, l2, axis2);
  const auto a = psi.amplitudes();
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t chunks = n < kChunks ? 1 : kChunks;
  Complex partial[kChunks] = {};
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * n / chunks;
    const std::int64_t hi = (c + 1) * n / chunks;
    Complex acc{0, 0};
    for (std::int64_t i = lo; i < hi; ++i) {
      const std::uint64_t w = static_cast<std::uint64_t>(i);
      acc += std::conj(o1.phase(w) * a[w ^ o1.mask]) * o2.phase(w) *
             a[w ^ o2.mask];
    }
    partial[c] = acc;
  }
  Complex total{0, 0};
  for (std::int64_t c = 0; c < chunks; ++c) total += partial[c];
  return total;
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::domain_error("inner_product: qubit count mismatch");
  }
  return det_sum_dot(a.amplitudes(), b.amplitudes());
}

void add_scaled(PureState& y, Complex alpha, const PureState& x) {
  if (y.num_qubits() != x.num_qubits()) {
    throw std::domain_error("add_scaled: qubit count mismatch");
  }
  auto yv = y.amplitudes();
  const auto xv = x.amplitudes();
  const std::int64_t n = static_cast<std::int64_t>(yv.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) yv[i] += alpha * xv[i];
}

void scale(PureState& y, Complex alpha) {
  auto yv = y.amplitudes();
  const std::int64_t n = static_cast<std::int64_t>(yv.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) yv[i] *= alpha;
}

namespace serial {

PureState pauli_apply(const PureState& psi, int site, PauliAxis axis) {
  const PauliOp op = make_op(psi, site, axis);
  const auto in = psi.amplitudes();
  std::vector<Complex> out(in.size());
  for (std::uint64_t w = 0; w < in.size(); ++w) {
    out[w] = op.phase(w) * in[w ^ op.mask];
  }
  return PureState::raw(psi.num_qubits(), std::move(out));
}

double pauli_expectation(const PureState& psi, int site, PauliAxis axis) {
  const PauliOp op = make_op(psi, site, axis);
  const auto a = psi.amplitudes();
  double acc = 0.0;
  for (std::uint64_t w = 0; w < a.size(); ++w) {
    acc += (std::conj(a[w]) * op.phase(w) * a[w ^ op.mask]).real();
  }
  return acc;
}

Complex pauli_correlation(const PureState& psi, int l, PauliAxis axis, int l2,
                          PauliAxis axis2) {
  const PauliOp o1 = make_op(psi, l, axis);
  const PauliOp o2 = make_op(psi, l2, axis2);
  const auto a = psi.amplitudes();
  Complex acc{0, 0};
  for (std::uint64_t w = 0; w < a.size(); ++w) {
    acc += std::conj(o1.phase(w) * a[w ^ o1.mask]) * o2.phase(w) *
           a[w ^ o2.mask];
  }
  return acc;
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::domain_error("inner_product: qubit count mismatch");
  }
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  Complex acc{0, 0};
  for (std::uint64_t i = 0; i < av.size(); ++i) {
    acc += std::conj(av[i]) * bv[i];
  }
  return acc;
}

void add_scaled(PureState& y, Complex alpha, const PureState& x) {
  auto yv = y.amplitudes();
  const auto xv = x.amplitudes();
  for (std::uint64_t i = 0; i < yv.size(); ++i) yv[i] += alpha * xv[i];
}

}  // namespace serial

}  // namespace macrosup
