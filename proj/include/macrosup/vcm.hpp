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
#include <vector>

#include "macrosup/pure_state.hpp"

namespace macrosup {

/// Coefficient table u_{l,alpha} of an additive observable
/// A = sum_l sum_alpha u_{l,alpha} sigma_alpha(l). Coefficients are stored
/// site-major: index 3*(l-1) + alpha.
struct AdditiveObservable {
  int n_sites = 0;
  std::vector<Complex> coeffs;

  static AdditiveObservable zero(int n_sites);
  /// M_x: coefficient 1 on every X axis.
  static AdditiveObservable x_sum(int n_sites);
  /// Coefficient 1 on every Z axis.
  static AdditiveObservable z_sum(int n_sites);

  static int index(int site, PauliAxis axis) {
    return 3 * (site - 1) + static_cast<int>(axis);
  }
  Complex coeff(int site, PauliAxis axis) const {
    return coeffs[index(site, axis)];
  }
  Complex& coeff(int site, PauliAxis axis) {
    return coeffs[index(site, axis)];
  }

  double coeff_norm() const;
  AdditiveObservable scaled(Complex factor) const;
  AdditiveObservable normalized() const;
};

/// Variance-covariance matrix of the local Pauli basis in a pure state:
/// V_{l alpha, l' alpha'} = <sigma_alpha(l) sigma_alpha'(l')> -
/// <sigma_alpha(l)><sigma_alpha'(l')>, a 3n x 3n Hermitian PSD matrix.
struct Vcm {
  int n_sites = 0;
  Eigen::MatrixXcd matrix;

  static int index(int site, PauliAxis axis) {
    return AdditiveObservable::index(site, axis);
  }
  double trace() const { return matrix.trace().real(); }
};

Vcm build_vcm(const PureState& psi);

struct MaxEigenpair {
  double e_max = 0.0;
  AdditiveObservable u_max;
  /// Distance to the next eigenvalue below e_max.
  double gap_below = 0.0;
  /// True when gap_below < 1e-8; u_max is then an arbitrary member of the
  /// top eigenspace and only e_max / variances are comparable across runs.
  bool degenerate = false;
};

/// Largest eigenvalue and (phase-fixed) eigenvector of the VCM.
/// Throws NumericError if the eigensolver fails to converge.
MaxEigenpair max_eigenpair(const Vcm& v);

/// Ascending eigenvalues of the VCM (full spectrum).
Eigen::VectorXd vcm_eigenvalues(const Vcm& v);

/// A |psi> (unnormalized image).
PureState apply_observable(const PureState& psi, const AdditiveObservable& a);

/// <Delta A^dag Delta A> = <A^dag A> - <A^dag><A> = u^dag V u.
double observable_variance(const PureState& psi, const AdditiveObservable& a);

/// | <A>_1 - <A>_2 |.
double mean_distance(const PureState& psi1, const PureState& psi2,
                     const AdditiveObservable& a);

}  // namespace macrosup
