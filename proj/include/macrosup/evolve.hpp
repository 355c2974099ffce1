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

#include <utility>
#include <vector>

#include "macrosup/algos.hpp"
#include "macrosup/glued_trees.hpp"

namespace macrosup {

/// Annealing schedule s(t) with s(0) = 0, s(T) = 1, monotone.
struct Schedule {
  enum class Kind { linear, local_adiabatic_grover };

  Kind kind = Kind::linear;
  double total_time = 1.0;
  double delta = 0.0;  // adiabatic slack of the local schedule
  int grover_n = 0;

  static Schedule linear(double total_time);
  /// ds/dt = delta * DeltaE(s)^2 with the closed-form Grover gap;
  /// T = integral ds / (delta DeltaE^2) evaluated in closed form.
  static Schedule local_adiabatic_grover(int n, double delta);

  double s_at(double t) const;
};

struct TraceRow {
  double t = 0.0;
  double s = 0.0;
  double ground_overlap = 0.0;
  double first_excited_overlap = 0.0;
  double energy = 0.0;
};

struct EvolutionTrace {
  std::vector<TraceRow> rows;
  double max_norm_drift = 0.0;
};

struct EvolveOptions {
  double dt = 0.05;
  int record_points = 21;
  bool track_overlaps = true;
};

/// 4th-order explicit integration of i d|psi>/dt = H(s(t)) |psi> from the
/// family's initial state (the uniform superposition in all four cases).
/// s is evaluated at each integrator stage time. Norm drift beyond 1e-6
/// raises a step-size NumericError with a suggested dt.
std::pair<PureState, EvolutionTrace> evolve(const InstanceSpec& spec,
                                            const Schedule& schedule,
                                            const EvolveOptions& options);

/// Same integrator in the glued-trees column basis, starting at |col(0)>.
std::pair<Eigen::VectorXcd, EvolutionTrace> evolve_glued(
    const GluedTreesSpec& spec, const Schedule& schedule,
    const EvolveOptions& options);

/// Lowest k eigenpairs of H(s), energies ascending; degenerate subspaces
/// come out as an orthonormal basis. Dense solve, dimension-capped.
std::vector<std::pair<double, PureState>> instantaneous_eigenstates(
    const InstanceSpec& spec, double s, int k);

/// Squared overlap with the degenerate ground band of H(s), computed from
/// the family's closed-form band structure (cross-checked against dense
/// diagonalization in the tests).
double ground_band_overlap(const InstanceSpec& spec, double s,
                           const PureState& psi);
double first_excited_band_overlap(const InstanceSpec& spec, double s,
                                  const PureState& psi);

struct BvEndToEndStats {
  int runs = 0;
  int minus_count = 0;     // sigma_x(n+1) read -1
  int recoveries = 0;      // conditional readouts matching a
  double minus_frequency() const {
    return runs ? static_cast<double>(minus_count) / runs : 0.0;
  }
};

/// Prepare -> evolve -> measure sigma_x(n+1); on -1 read sigma_x(1..n) and
/// compare with a. The evolution is deterministic and computed once; each
/// run draws fresh measurement outcomes from the evolved state.
BvEndToEndStats run_bv_end_to_end(int n, std::uint64_t a,
                                  const Schedule& schedule, double dt,
                                  int runs, std::uint64_t seed);

struct SimonEndToEndStats {
  std::vector<int> runs_to_recover;  // per seed; capped at max_runs
  int recovered_seeds = 0;
  bool all_orthogonal = true;  // every x* had x*.a = 0 (mod 2)
  double median_runs = 0.0;
};

/// Repeats prepare/evolve/measure-z(register 2)/measure-x(register 1),
/// feeding x* samples to simon_recover, until a is found (or max_runs).
SimonEndToEndStats run_simon_end_to_end(int n, std::uint64_t a,
                                        const Schedule& schedule, double dt,
                                        int num_seeds, int max_runs,
                                        std::uint64_t seed);

}  // namespace macrosup
