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

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "macrosup/instances.hpp"
#include "macrosup/pure_state.hpp"
#include "macrosup/vcm.hpp"

namespace macrosup {

// ---------------------------------------------------------------------------
// Grover
// ---------------------------------------------------------------------------

/// Closed-form quantities of the Grover ground state at annealing
/// parameter s: |psi0(s)> = a_s |w*> + b_s |phi>.
struct GroverAnalytic {
  double s = 0.0;
  double theta_s = 0.0;
  double a_s = 0.0;
  double b_s = 0.0;
  double gap = 0.0;  // Delta E(s), also the spectral gap of H(s)

  static GroverAnalytic at(int n, double s);
};

PureState grover_ground_state(int n, std::uint64_t w_star, double s);

/// Spectral gap Delta E(s) = sqrt(1 - 4 s (1-s) (N-1)/N), evaluated in the
/// cancellation-free form sqrt((1 + (N-1)(2s-1)^2) / N).
double grover_gap(int n, double s);

/// <Delta M_x^2> for the ground state, exact closed form:
/// b^2(1-b^2) n^2 + a^2 n + 2ab(1-2b^2) n^2/sqrt(N) - 4 a^2 b^2 n^2/N.
double grover_mx_variance_analytic(int n, double s);

/// The n^2-coefficient of the fluctuation (the macroscopic part):
/// (variance - a_s^2 n) / n^2.
double grover_mx_prefactor_analytic(int n, double s);

// ---------------------------------------------------------------------------
// Deutsch-Jozsa
// ---------------------------------------------------------------------------

/// |beta_f> = [mu |0>_1 + (1-mu) |1>_1] (x) |+>^(n-1).
PureState dj_beta_f(int n, int mu_f);

/// Ground state of H(s) via the 2x2 effective Hamiltonian in
/// span{|beta_f>, |beta_f_perp>}; always a product state.
PureState dj_ground_state(int n, int mu_f, double s);

/// Gap of H(s) above the (unique) ground state.
double dj_gap(double s);

/// mu_f = |sum_w (-1)^{f(w)}| / N for an explicit oracle (demo helper).
double dj_mu_from_oracle(int n, const std::vector<int>& f_values);

// ---------------------------------------------------------------------------
// Bernstein-Vazirani (n + 1 qubits, ancilla is site n+1)
// ---------------------------------------------------------------------------

inline int bv_f(std::uint64_t a, std::uint64_t w) { return parity_dot(a, w); }

/// s = 1 ground state reached by the adiabatic evolution:
/// (1/sqrt(N)) sum_w |w> (x) |f_a(w)>.
PureState bv_state_s1(int n, std::uint64_t a);

/// Post-measurement state after reading -1 on sigma_x(n+1):
/// (x)_l (|0> + (-1)^{a_l} |1>)/sqrt(2) (x) |->.
PureState bv_minus_state(int n, std::uint64_t a);

/// Adiabatically connected ground state at any s (exact per-sector 2x2
/// continuation seeded at the all-|+> initial state).
PureState bv_ground_state(int n, std::uint64_t a, double s);

/// Gap above the N-fold degenerate ground space; n-independent.
double bv_gap(double s);

double bv_emax_formula(int n, std::uint64_t a);

// ---------------------------------------------------------------------------
// Simon (2n - 1 qubits: n-qubit first register, (n-1)-qubit second register)
// ---------------------------------------------------------------------------

/// Deterministic 2-to-1 oracle honoring the promise g(w) = g(w xor a):
/// the coset representative r = min(w, w xor a) has a zero at a's pivot
/// (the highest set integer bit = lowest site index), and g(w) is r with
/// that bit deleted.
class SimonOracle {
 public:
  SimonOracle(int n, std::uint64_t a);

  std::uint64_t g(std::uint64_t w) const;
  int n() const { return n_; }
  std::uint64_t a() const { return a_; }
  int pivot_bit() const { return pivot_; }

 private:
  int n_;
  std::uint64_t a_;
  int pivot_;
};

PureState simon_state_s1(int n, std::uint64_t a);

/// Post-measurement state (|w*> + |w* xor a>)/sqrt(2) (x) |g(w*)>.
PureState simon_post_state(int n, std::uint64_t a, std::uint64_t w_star);

/// Adiabatically connected ground state at any s.
PureState simon_ground_state(int n, std::uint64_t a, double s);

/// Gap above the N-fold degenerate ground space; n-independent.
double simon_gap(double s);

double simon_emax_formula(int n, std::uint64_t a);

struct SimonRecovery {
  bool recovered = false;
  std::uint64_t a = 0;
};

/// GF(2) Gaussian elimination over the collected x* samples. Recovers the
/// unique nonzero null vector once the samples reach rank n-1; returns
/// recovered = false while insufficient. Rank n signals an oracle-promise
/// violation and throws NumericError.
SimonRecovery simon_recover(int n, const std::vector<std::uint64_t>& samples);

// ---------------------------------------------------------------------------
// Interpolating Hamiltonians, matrix-free
// ---------------------------------------------------------------------------

/// H(s) |psi> = [s H_p + (1-s) H_d] |psi> (unnormalized image).
PureState hamiltonian_apply(const InstanceSpec& spec, double s,
                            const PureState& psi);

/// Upper bound on ||H(s)|| uniform in s, used for step-size checks.
double hamiltonian_norm_bound(const InstanceSpec& spec);

/// Dense matrix of H(s) built column-by-column from hamiltonian_apply.
/// Throws CapabilityError above 2^14 dimensions.
Eigen::MatrixXcd dense_hamiltonian(const InstanceSpec& spec, double s);

// ---------------------------------------------------------------------------
// Reconstructed-observable check
// ---------------------------------------------------------------------------

enum class ObservableCheck { match, mismatch, indeterminate };

/// The closed-form macroscopically fluctuating observable of the family's
/// p-maximizing state (BV: sum_l a_l X(l) + X(n+1); Simon:
/// sum_l (-1)^{w*_l} a_l Z(l), needs w*).
AdditiveObservable predicted_observable(
    const InstanceSpec& spec, std::optional<std::uint64_t> w_star = {});

/// True iff u_max matches the prediction up to global phase (coefficient
/// tolerance 1e-6). Degenerate top eigenspace -> indeterminate. For Grover
/// the prediction is structural: X-dominant with uniform site magnitudes.
ObservableCheck reconstructed_observable_check(
    const InstanceSpec& spec, const MaxEigenpair& pair,
    std::optional<std::uint64_t> w_star = {});

}  // namespace macrosup
