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

#include <algorithm>
#include <cmath>

#include "macrosup/algos.hpp"

namespace macrosup {

AdditiveObservable predicted_observable(const InstanceSpec& spec,
                                        std::optional<std::uint64_t> w_star) {
  validate(spec);
  return std::visit(
      [&](const auto& sp) -> AdditiveObservable {
        using T = std::decay_t<decltype(sp)>;
        if constexpr (std::is_same_v<T, BVSpec>) {
          auto obs = AdditiveObservable::zero(sp.n + 1);
          for (int l = 1; l <= sp.n; ++l) {
            const int a_l = static_cast<int>((sp.a >> (sp.n - l)) & 1u);
            obs.coeff(l, PauliAxis::X) = static_cast<double>(a_l);
          }
          obs.coeff(sp.n + 1, PauliAxis::X) = 1.0;
          return obs.normalized();
        } else if constexpr (std::is_same_v<T, SimonSpec>) {
          if (!w_star) {
            throw std::domain_error(
                "Simon predicted observable needs the measured w*");
          }
          auto obs = AdditiveObservable::zero(2 * sp.n - 1);
          for (int l = 1; l <= sp.n; ++l) {
            const int a_l = static_cast<int>((sp.a >> (sp.n - l)) & 1u);
            const int w_l = static_cast<int>((*w_star >> (sp.n - l)) & 1u);
            obs.coeff(l, PauliAxis::Z) =
                (w_l ? -1.0 : 1.0) * static_cast<double>(a_l);
          }
          return obs.normalized();
        } else if constexpr (std::is_same_v<T, GroverSpec>) {
          return AdditiveObservable::x_sum(sp.n).normalized();
        } else {
          throw std::domain_error(
              "no predicted observable for the DJ family (p = 1)");
        }
      },
      spec);
}

namespace {

ObservableCheck check_against_prediction(const AdditiveObservable& pred,
                                         const AdditiveObservable& got) {
  // Both are unit vectors; align global phases by the largest-magnitude
  // coefficient and compare elementwise.
  auto phase_fixed = [](AdditiveObservable v) {
    int imax = 0;
    for (int i = 1; i < static_cast<int>(v.coeffs.size()); ++i) {
      if (std::abs(v.coeffs[i]) > std::abs(v.coeffs[imax])) imax = i;
    }
    const double mag = std::abs(v.coeffs[imax]);
    if (mag > 0) {
      const Complex rot = std::conj(v.coeffs[imax]) / mag;
      for (auto& c : v.coeffs) c *= rot;
    }
    return v;
  };
  const auto p = phase_fixed(pred);
  const auto g = phase_fixed(got);
  double worst = 0.0;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    worst = std::max(worst, std::abs(p.coeffs[i] - g.coeffs[i]));
  }
  return worst <= 1e-6 ? ObservableCheck::match : ObservableCheck::mismatch;
}

// Grover's top eigenvector has no simple closed form at finite N. The
// checkable structure: every axis weight is site-uniform in magnitude and
// the X axis carries a substantial share. (The top mode mixes X with the
// w*-signed Z sum, which separates |w*> from |phi> equally well; M_x is
// one maximal choice, not the unique one.)
ObservableCheck check_grover_structure(int n, const AdditiveObservable& got) {
  double x_weight = 0.0;
  for (PauliAxis ax : kAllAxes) {
    double lo = 1e300, hi = 0.0, weight = 0.0;
    for (int l = 1; l <= n; ++l) {
      const double m = std::abs(got.coeff(l, ax));
      weight += m * m;
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
    if (ax == PauliAxis::X) x_weight = weight;
    if (weight > 0.01 && hi - lo > 0.05 * hi) {
      return ObservableCheck::mismatch;
    }
  }
  if (x_weight < 0.25) return ObservableCheck::mismatch;
  return ObservableCheck::match;
}

}  // namespace

ObservableCheck reconstructed_observable_check(
    const InstanceSpec& spec, const MaxEigenpair& pair,
    std::optional<std::uint64_t> w_star) {
  if (pair.degenerate) return ObservableCheck::indeterminate;
  if (std::holds_alternative<GroverSpec>(spec)) {
    return check_grover_structure(std::get<GroverSpec>(spec).n, pair.u_max);
  }
  return check_against_prediction(predicted_observable(spec, w_star),
                                  pair.u_max);
}

}  // namespace macrosup
