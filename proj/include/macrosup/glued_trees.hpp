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
#include <cstdint>
#include <vector>

#include "macrosup/common.hpp"

namespace macrosup {

/// Two height-n binary trees glued leaf-to-leaf; vertices carry random
/// 2n-bit names. All production paths work in the (2n+2)-dimensional
/// column basis |col(j)>; only the name Hamming statistics (not the random
/// cycle) enter any observable.
struct GluedTreesSpec {
  int n = 4;
  double alpha = 0.4;
  std::uint64_t name_seed = 0;

  int num_columns() const { return 2 * n + 2; }
  std::uint64_t num_vertices() const { return (std::uint64_t{1} << (n + 2)) - 2; }
  std::uint64_t column_size(int j) const {
    return j <= n ? (std::uint64_t{1} << j)
                  : (std::uint64_t{1} << (2 * n + 1 - j));
  }
  double crossing_s() const { return alpha / std::sqrt(2.0); }
};

void validate(const GluedTreesSpec& spec);

/// Amplitudes gamma_j over the column basis.
struct ColumnState {
  std::vector<double> gammas;
  double norm() const;
};

/// H(s) = (1-s) alpha H_ini + s alpha H_fin - s(1-s) H_ora in the column
/// basis: rank-one corners plus the tridiagonal oracle hopping (sqrt(2) on
/// the glue link j = n, 1 elsewhere).
Eigen::MatrixXd column_hamiltonian(const GluedTreesSpec& spec, double s);

struct SpectrumPoint {
  double s = 0.0;
  double e0 = 0.0;
  double e1 = 0.0;
  double gap = 0.0;
};

std::vector<SpectrumPoint> spectrum_sweep(const GluedTreesSpec& spec,
                                          const std::vector<double>& s_grid);

/// One bound-state solution of the rescaled eigenproblem: gamma_j built
/// from a e^{qj} + b e^{-qj} on the left and the mirrored (c, d) pair on
/// the right, with E' = -2 cosh q = -(x + 1/x), x = e^q > 1.
struct AnsatzSolution {
  double q = 0.0;
  double x = 0.0;
  double e_rescaled = 0.0;  // E' = -(x + 1/x)
  double energy = 0.0;      // s(1-s) E'
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  /// Residual of the row-equilibrated boundary system at (a,b,c,d).
  double residual = 0.0;
};

/// All det M = 0 roots with x > 1, largest x (lowest energy) first.
/// Requires 0 < s < alpha. Throws NumericError when a bracket reports no
/// sign change where a root was expected.
std::vector<AnsatzSolution> ansatz_roots(const GluedTreesSpec& spec, double s);

/// Column profile of an AnsatzSolution, normalized.
ColumnState ansatz_column_state(const GluedTreesSpec& spec, double s,
                                const AnsatzSolution& sol);

enum class Branch { ground, first_excited };
enum class ColumnStateMode { numeric, ansatz };

/// Eigenstate of the column Hamiltonian on the requested branch. Within
/// 1e-6 of the crossing s_c the branch labels are ambiguous and the call
/// throws unless allow_near_crossing is set.
ColumnState column_state(const GluedTreesSpec& spec, double s, Branch branch,
                         ColumnStateMode mode,
                         bool allow_near_crossing = false);

/// Hamming distances d_H(w(v), w(0)) of sampled distinct vertex names,
/// grouped per column (vertex 0 is the left root itself).
struct NameSample {
  int n = 0;
  /// per column j, the list of distances of its vertices
  std::vector<std::vector<int>> distances;
};

NameSample sample_names(const GluedTreesSpec& spec);

struct ObservableStats {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and variance of A = sum_{l=1}^{2n} (-1)^{w_l(0)} sigma_z(l) in the
/// column-superposed state. A is diagonal with eigenvalue 2n - 2 d_H on
/// each name, so only per-column Hamming statistics enter.
ObservableStats observable_stats(const GluedTreesSpec& spec,
                                 const ColumnState& state);

/// Same, against an already-drawn name sample (one sample can serve many
/// states of the same instance).
ObservableStats observable_stats(const NameSample& sample,
                                 const ColumnState& state);

struct TailReport {
  int n = 0;
  double epsilon = 0.0;
  double exact_fraction = 0.0;
  double bound = 0.0;
};

/// Exact fraction of n-bit strings with |k - n/2| > eps n/2, against the
/// closed-form tail bound 2/N + sqrt(2(1-eps)n / (pi (1+eps)))
/// exp(-h(eps) n / 2 + 1/(12n)).
TailReport binomial_tail(int n, double epsilon);

/// Monte Carlo estimate of the probability that a fresh random name set
/// contains a name within Hamming distance K of w(0).
double collision_probability_mc(const GluedTreesSpec& spec, int k_cutoff,
                                int trials, Rng& rng);

/// Union bound L M / (N - L) with L = sum_{k=1}^{K} C(2n, k), N = 2^{2n},
/// M the vertex count.
double collision_union_bound(const GluedTreesSpec& spec, int k_cutoff);

}  // namespace macrosup
