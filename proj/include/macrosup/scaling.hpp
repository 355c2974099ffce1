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

#include <string>
#include <vector>

#include "macrosup/common.hpp"

namespace macrosup {

struct ScalingRow {
  int n = 0;
  std::string label;
  double value = 0.0;
};

/// One (n, label, value) series plus its log-log fit.
struct ScalingSeries {
  std::vector<ScalingRow> rows;
  double fit_exponent = 0.0;  // p_e
  double fit_stderr = 0.0;
};

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  int points = 0;
};

/// Ordinary least squares on (log x, log y). Requires >= 3 points with
/// x, y > 0 and at least 3 distinct x values.
LogLogFit fit_loglog(const std::vector<std::pair<double, double>>& xy);

struct PeFit {
  double p_e = 0.0;
  double stderr_value = 0.0;
};

/// p_e = 1 + slope of log(value) vs log(n). Used for e_max-like series,
/// where value = Theta(n^{p_e - 1}).
PeFit fit_p_e(const std::vector<ScalingRow>& rows);

enum class PVerdict { one, two, indeterminate };

std::string to_string(PVerdict v);

/// Finite-n decision rule: p = 2 when p_e >= 1.5 and the 95% CI excludes
/// 1.0; p = 1 when p_e <= 1.5 and the CI excludes 2.0; else indeterminate.
/// The CI uses Student-t quantiles on the slope's standard error.
PVerdict decide_verdict(double p_e, double stderr_value, int points);

/// Two-sided 95% Student-t quantile for the given degrees of freedom.
double student_t_95(int dof);

/// Fraction of values outside [median/2, 2*median] — the reported
/// exceptional-instance fraction (explicit Theta band, gamma = 1/2 .. 2).
double exceptional_fraction(const std::vector<double>& values);

double median(std::vector<double> values);

}  // namespace macrosup
