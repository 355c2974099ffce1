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

#include <span>

#include "macrosup/pure_state.hpp"

// Matrix-free bit-index kernels over amplitude vectors. No 2^n x 2^n matrix
// is ever materialized. The default entry points are OpenMP-parallel maps
// plus fixed-chunk deterministic reductions: results are bit-identical for
// any thread count. macrosup::serial holds the plain-loop reference
// implementations kept for testing and benchmarking.

namespace macrosup {

/// sigma_alpha(site) |psi>. Unitary, so the image stays unit norm.
PureState pauli_apply(const PureState& psi, int site, PauliAxis axis);

/// <psi| sigma_alpha(site) |psi>, real in [-1, 1].
double pauli_expectation(const PureState& psi, int site, PauliAxis axis);

/// <psi| sigma_alpha(l) sigma_alpha2(l2) |psi>, fused single pass.
Complex pauli_correlation(const PureState& psi, int l, PauliAxis axis,
                          int l2, PauliAxis axis2);

/// <a|b>. Throws std::domain_error on dimension mismatch.
Complex inner_product(const PureState& a, const PureState& b);

/// y += alpha * x (elementwise over amplitudes).
void add_scaled(PureState& y, Complex alpha, const PureState& x);

/// y = alpha * y.
void scale(PureState& y, Complex alpha);

// Deterministic reductions over raw spans (fixed 64-chunk combine order).
double det_sum_norm2(std::span<const Complex> v);
Complex det_sum_dot(std::span<const Complex> a, std::span<const Complex> b);

namespace serial {

PureState pauli_apply(const PureState& psi, int site, PauliAxis axis);
double pauli_expectation(const PureState& psi, int site, PauliAxis axis);
Complex pauli_correlation(const PureState& psi, int l, PauliAxis axis,
                          int l2, PauliAxis axis2);
Complex inner_product(const PureState& a, const PureState& b);
void add_scaled(PureState& y, Complex alpha, const PureState& x);

}  // namespace serial

}  // namespace macrosup
