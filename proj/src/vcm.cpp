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

#include "macrosup/vcm.hpp"

#include <cmath>

#include "macrosup/pauli_kernels.hpp"

namespace macrosup {

AdditiveObservable AdditiveObservable::zero(int n_sites) {
  return {n_sites, std::vector<Complex>(3 * n_sites, Complex{0, 0})};
}

AdditiveObservable AdditiveObservable::x_sum(int n_sites) {
  auto a = zero(n_sites);
  for (int l = 1; l <= n_sites; ++l) a.coeff(l, PauliAxis::X) = 1.0;
  return a;
}

AdditiveObservable AdditiveObservable::z_sum(int n_sites) {
  auto a = zero(n_sites);
  for (int l = 1; l <= n_sites; ++l) a.coeff(l, PauliAxis::Z) = 1.0;
  return a;
}

double AdditiveObservable::coeff_norm() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

AdditiveObservable AdditiveObservable::scaled(Complex factor) const {
  AdditiveObservable out = *this;
  for (auto& c : out.coeffs) c *= factor;
  return out;
}

AdditiveObservable AdditiveObservable::normalized() const {
  const double n = coeff_norm();
  if (n < 1e-300) throw NumericError("cannot normalize a zero observable");
  return scaled(Complex{1.0 / n, 0.0});
}

Vcm build_vcm(const PureState& psi) {
  const int n = psi.num_qubits();
  const int d = 3 * n;

  std::vector<double> mean(d);
  for (int l = 1; l <= n; ++l) {
    for (PauliAxis ax : kAllAxes) {
      mean[Vcm::index(l, ax)] = pauli_expectation(psi, l, ax);
    }
  }

  // Upper triangle of the correlation matrix; each entry is one fused pass
  // over the amplitudes, entries are independent.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(d * (d + 1) / 2);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) pairs.emplace_back(i, j);
  }

  Eigen::MatrixXcd m(d, d);
  const std::int64_t np = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t p = 0; p < np; ++p) {
    const auto [i, j] = pairs[p];
    const int li = i / 3 + 1, lj = j / 3 + 1;
    const auto ai = static_cast<PauliAxis>(i % 3);
    const auto aj = static_cast<PauliAxis>(j % 3);
    const Complex corr = pauli_correlation(psi, li, ai, lj, aj);
    m(i, j) = corr - mean[i] * mean[j];
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < i; ++j) m(i, j) = std::conj(m(j, i));
  }
  return Vcm{n, std::move(m)};
}

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve_vcm(const Vcm& v) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(v.matrix);
  if (es.info() != Eigen::Success) {
    throw NumericError("VCM eigensolver failed to converge (dim " +
                       std::to_string(v.matrix.rows()) + ", |V| = " +
                       std::to_string(v.matrix.norm()) + ")");
  }
  return es;
}

}  // namespace

MaxEigenpair max_eigenpair(const Vcm& v) {
  const auto es = solve_vcm(v);
  const int d = static_cast<int>(v.matrix.rows());
  MaxEigenpair out;
  out.e_max = es.eigenvalues()(d - 1);
  out.gap_below = d >= 2 ? es.eigenvalues()(d - 1) - es.eigenvalues()(d - 2)
                         : out.e_max;
  out.degenerate = out.gap_below < 1e-8;

  Eigen::VectorXcd u = es.eigenvectors().col(d - 1);
  // Fix the global phase: largest-magnitude coefficient real positive.
  int imax = 0;
  for (int i = 1; i < d; ++i) {
    if (std::abs(u(i)) > std::abs(u(imax))) imax = i;
  }
  if (std::abs(u(imax)) > 0) u *= std::conj(u(imax)) / std::abs(u(imax));

  out.u_max = AdditiveObservable::zero(v.n_sites);
  for (int i = 0; i < d; ++i) out.u_max.coeffs[i] = u(i);
  return out;
}

Eigen::VectorXd vcm_eigenvalues(const Vcm& v) {
  return solve_vcm(v).eigenvalues();
}

PureState apply_observable(const PureState& psi,
                           const AdditiveObservable& a) {
  if (a.n_sites != psi.num_qubits()) {
    throw std::domain_error("apply_observable: site count mismatch");
  }
  PureState acc = PureState::zeros(psi.num_qubits());
  for (int l = 1; l <= a.n_sites; ++l) {
    for (PauliAxis ax : kAllAxes) {
      const Complex c = a.coeff(l, ax);
      if (c == Complex{0, 0}) continue;
      add_scaled(acc, c, pauli_apply(psi, l, ax));
    }
  }
  return acc;
}

double observable_variance(const PureState& psi,
                           const AdditiveObservable& a) {
  const PureState image = apply_observable(psi, a);
  const double second_moment = det_sum_norm2(image.amplitudes());
  const Complex mean = inner_product(psi, image);
  return second_moment - std::norm(mean);
}

double mean_distance(const PureState& psi1, const PureState& psi2,
                     const AdditiveObservable& a) {
  const Complex m1 = inner_product(psi1, apply_observable(psi1, a));
  const Complex m2 = inner_product(psi2, apply_observable(psi2, a));
  return std::abs(m1 - m2);
}

}  // namespace macrosup
