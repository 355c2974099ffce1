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

#include "macrosup/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace macrosup {

LogLogFit fit_loglog(const std::vector<std::pair<double, double>>& xy) {
  if (xy.size() < 3) {
    throw std::domain_error("fit_loglog: need at least 3 points");
  }
  std::set<double> distinct;
  for (const auto& [x, y] : xy) {
    if (x <= 0.0 || y <= 0.0) {
      throw std::domain_error("fit_loglog: nonpositive value");
    }
    distinct.insert(x);
  }
  if (distinct.size() < 3) {
    throw std::domain_error("fit_loglog: need at least 3 distinct x values");
  }

  const int m = static_cast<int>(xy.size());
  double sx = 0, sy = 0;
  for (const auto& [x, y] : xy) {
    sx += std::log(x);
    sy += std::log(y);
  }
  const double xbar = sx / m, ybar = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : xy) {
    const double dx = std::log(x) - xbar;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - ybar);
  }
  LogLogFit fit;
  fit.points = m;
  fit.slope = sxy / sxx;
  fit.intercept = ybar - fit.slope * xbar;
  double ssr = 0;
  for (const auto& [x, y] : xy) {
    const double r = std::log(y) - (fit.intercept + fit.slope * std::log(x));
    ssr += r * r;
  }
  fit.stderr_slope = m > 2 ? std::sqrt(ssr / (m - 2) / sxx) : 0.0;
  return fit;
}

PeFit fit_p_e(const std::vector<ScalingRow>& rows) {
  std::vector<std::pair<double, double>> xy;
  xy.reserve(rows.size());
  for (const auto& r : rows) {
    xy.emplace_back(static_cast<double>(r.n), r.value);
  }
  const LogLogFit fit = fit_loglog(xy);
  return PeFit{fit.slope + 1.0, fit.stderr_slope};
}

std::string to_string(PVerdict v) {
  switch (v) {
    case PVerdict::one:
      return "1";
    case PVerdict::two:
      return "2";
    default:
      return "indeterminate";
  }
}

double student_t_95(int dof) {
  static constexpr double table[] = {
      0,     12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262,
      2.228, 2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093,
      2.086, 2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045,
      2.042};
  if (dof < 1) return table[1];
  if (dof <= 30) return table[dof];
  return 1.96;
}

PVerdict decide_verdict(double p_e, double stderr_value, int points) {
  const double t = student_t_95(points - 2);
  const double lo = p_e - t * stderr_value;
  const double hi = p_e + t * stderr_value;
  if (p_e >= 1.5 && lo > 1.0) return PVerdict::two;
  if (p_e <= 1.5 && hi < 2.0) return PVerdict::one;
  return PVerdict::indeterminate;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::domain_error("median of empty set");
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size();
  return m % 2 == 1 ? values[m / 2]
                    : 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

double exceptional_fraction(const std::vector<double>& values) {
  const double med = median(values);
  int exc = 0;
  for (double v : values) {
    if (v < 0.5 * med || v > 2.0 * med) ++exc;
  }
  return static_cast<double>(exc) / static_cast<double>(values.size());
}

}  // namespace macrosup
