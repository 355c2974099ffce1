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

#include <cmath>

#include "macrosup/algos.hpp"
#include "macrosup/pauli_kernels.hpp"

namespace macrosup {

namespace {

// H = s (1 - |t1><t1|) + (1-s) (1 - |t2><t2|) for two projector
// Hamiltonians; used by Grover (t1 = w*, t2 = phi) and DJ (t1 = beta_f).
PureState projector_pair_apply(const PureState& t1, const PureState& t2,
                               double s, const PureState& psi) {
  std::vector<Complex> out(psi.amplitudes().begin(), psi.amplitudes().end());
  PureState image = PureState::raw(psi.num_qubits(), std::move(out));
  const Complex o1 = inner_product(t1, psi);
  const Complex o2 = inner_product(t2, psi);
  add_scaled(image, -s * o1, t1);
  add_scaled(image, -(1.0 - s) * o2, t2);
  return image;
}

PureState bv_apply(const BVSpec& spec, double s, const PureState& psi) {
  const std::uint64_t N = dim_of(spec.n);
  const auto a = psi.amplitudes();
  std::vector<Complex> out(a.size());
  // H_p = (1/2) sum_w |w><w| (x) [1 - (-1)^{f_a(w)} sigma_z], diagonal:
  // cost 1 on the mismatched ancilla value, 0 on the matched one.
  // H_d = (1/2)[1 - sigma_x(n+1)]: ancilla-pair mixing.
  const std::int64_t half = static_cast<std::int64_t>(N);
#pragma omp parallel for schedule(static)
  for (std::int64_t wi = 0; wi < half; ++wi) {
    const std::uint64_t w = static_cast<std::uint64_t>(wi);
    const std::uint64_t f = static_cast<std::uint64_t>(bv_f(spec.a, w));
    const Complex mismatched = a[(w << 1) | (f ^ 1u)];
    const Complex d0 = a[w << 1];
    const Complex d1 = a[(w << 1) | 1u];
    // (1-s) * H_d on the ancilla pair; s * H_p costs 1 on the mismatch only
    const Complex hd0 = 0.5 * (1.0 - s) * (d0 - d1);
    const Complex hd1 = 0.5 * (1.0 - s) * (d1 - d0);
    out[(w << 1) | f] = f == 0 ? hd0 : hd1;
    out[(w << 1) | (f ^ 1u)] = s * mismatched + (f == 0 ? hd1 : hd0);
  }
  return PureState::raw(spec.n + 1, std::move(out));
}

PureState simon_apply(const SimonSpec& spec, double s, const PureState& psi) {
  const SimonOracle oracle(spec.n, spec.a);
  const int m = spec.n - 1;
  const std::uint64_t M = dim_of(m);
  const auto a = psi.amplitudes();
  std::vector<Complex> out(a.size());
  const std::int64_t total = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t vi = 0; vi < total; ++vi) {
    const std::uint64_t v = static_cast<std::uint64_t>(vi);
    const std::uint64_t w = v >> m;
    const std::uint64_t b = v & (M - 1);
    const std::uint64_t gw = oracle.g(w);
    // H_p: (1/2) sum_l2 [1 - (-1)^{g_l2} sigma_z(l2)] diagonal = number of
    // mismatched second-register bits.
    const double hp = static_cast<double>(popcount64(b ^ gw));
    // H_d: sum_l2 (1/2)[1 - sigma_x(l2)] = (m/2) psi - (1/2) sum flips.
    Complex acc = (s * hp + (1.0 - s) * 0.5 * m) * a[v];
    for (int bit = 0; bit < m; ++bit) {
      acc -= (1.0 - s) * 0.5 * a[v ^ (std::uint64_t{1} << bit)];
    }
    out[v] = acc;
  }
  return PureState::raw(2 * spec.n - 1, std::move(out));
}

}  // namespace

PureState hamiltonian_apply(const InstanceSpec& spec, double s,
                            const PureState& psi) {
  validate(spec);
  if (s < 0.0 || s > 1.0) throw std::domain_error("s must be in [0, 1]");
  if (total_qubits(spec) != psi.num_qubits()) {
    throw std::domain_error("hamiltonian_apply: state dimension mismatch");
  }
  return std::visit(
      [&](const auto& sp) -> PureState {
        using T = std::decay_t<decltype(sp)>;
        if constexpr (std::is_same_v<T, GroverSpec>) {
          return projector_pair_apply(
              PureState::basis_state(sp.n, sp.w_star),
              PureState::uniform_superposition(sp.n), s, psi);
        } else if constexpr (std::is_same_v<T, DJSpec>) {
          return projector_pair_apply(dj_beta_f(sp.n, sp.mu_f),
                                      PureState::uniform_superposition(sp.n),
                                      s, psi);
        } else if constexpr (std::is_same_v<T, BVSpec>) {
          return bv_apply(sp, s, psi);
        } else {
          return simon_apply(sp, s, psi);
        }
      },
      spec);
}

double hamiltonian_norm_bound(const InstanceSpec& spec) {
  return std::visit(
      [](const auto& sp) -> double {
        using T = std::decay_t<decltype(sp)>;
        if constexpr (std::is_same_v<T, SimonSpec>) {
          return static_cast<double>(sp.n - 1);
        } else {
          (void)sp;
          return 1.0;
        }
      },
      spec);
}

Eigen::MatrixXcd dense_hamiltonian(const InstanceSpec& spec, double s) {
  const int nq = total_qubits(spec);
  const std::uint64_t dim = dim_of(nq);
  if (dim > (std::uint64_t{1} << 14)) {
    throw CapabilityError("dense_hamiltonian: dimension " +
                          std::to_string(dim) + " exceeds 2^14");
  }
  Eigen::MatrixXcd h(dim, dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    const PureState col =
        hamiltonian_apply(spec, s, PureState::basis_state(nq, j));
    for (std::uint64_t i = 0; i < dim; ++i) h(i, j) = col[i];
  }
  return h;
}

}  // namespace macrosup
