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

#include "macrosup/glued_trees.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace macrosup {

void validate(const GluedTreesSpec& spec) {
  if (spec.n < 1) throw std::domain_error("glued trees: n must be >= 1");
  if (!(spec.alpha > 0.0 && spec.alpha < 0.5)) {
    throw std::domain_error("glued trees: alpha must lie in (0, 1/2)");
  }
  // The column model never materializes the 2^{2n} name space; names only
  // need to fit a 64-bit word.
  if (spec.n > 31) {
    throw std::domain_error("glued trees: 2n-bit names exceed 64 bits");
  }
}

double ColumnState::norm() const {
  double s = 0.0;
  for (double g : gammas) s += g * g;
  return std::sqrt(s);
}

Eigen::MatrixXd column_hamiltonian(const GluedTreesSpec& spec, double s) {
  validate(spec);
  if (s < 0.0 || s > 1.0) throw std::domain_error("s must be in [0, 1]");
  const int d = spec.num_columns();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  h(0, 0) -= (1.0 - s) * spec.alpha;
  h(d - 1, d - 1) -= s * spec.alpha;
  for (int j = 0; j + 1 < d; ++j) {
    const double w = (j == spec.n) ? std::sqrt(2.0) : 1.0;
    h(j, j + 1) -= s * (1.0 - s) * w;
    h(j + 1, j) -= s * (1.0 - s) * w;
  }
  return h;
}

std::vector<SpectrumPoint> spectrum_sweep(const GluedTreesSpec& spec,
                                          const std::vector<double>& s_grid) {
  std::vector<SpectrumPoint> out;
  out.reserve(s_grid.size());
  for (double s : s_grid) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        column_hamiltonian(spec, s), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw NumericError("column spectrum eigensolve failed at s = " +
                         std::to_string(s));
    }
    const double e0 = es.eigenvalues()(0);
    const double e1 = es.eigenvalues()(1);
    out.push_back({s, e0, e1, e1 - e0});
  }
  return out;
}

namespace {

// Boundary system of the exponential ansatz with rows 3 and 4 scaled by
// x^{-n}; row scaling leaves the null space and root locus unchanged while
// keeping every entry O(x).
Eigen::Matrix4d boundary_matrix(const GluedTreesSpec& spec, double s,
                                double x) {
  const double ap = spec.alpha / s;
  const double bp = spec.alpha / (1.0 - s);
  const double xi = 1.0 / x;
  const double r2 = std::sqrt(2.0);
  const int n = spec.n;
  const double x_m2n = std::pow(xi, 2 * n);
  Eigen::Matrix4d m;
  m << xi - ap, x - ap, 0.0, 0.0,
       0.0, 0.0, xi - bp, x - bp,
       x, x_m2n * xi, -r2, -r2 * x_m2n,
       -r2, -r2 * x_m2n, x, x_m2n * xi;
  return m;
}

double det_m(const GluedTreesSpec& spec, double s, double x) {
  return boundary_matrix(spec, s, x).determinant();
}

// Bisection to double resolution; assumes f(lo) and f(hi) straddle zero.
double bisect(const GluedTreesSpec& spec, double s, double lo, double hi,
              double flo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = det_m(spec, s, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void scan_window(const GluedTreesSpec& spec, double s, double lo, double hi,
                 int points, std::vector<double>& roots) {
  if (!(hi > lo) || points < 2) return;
  double x_prev = lo;
  double f_prev = det_m(spec, s, x_prev);
  for (int i = 1; i <= points; ++i) {
    const double x = lo + (hi - lo) * i / points;
    const double f = det_m(spec, s, x);
    if (f == 0.0) {
      roots.push_back(x);
    } else if ((f < 0) != (f_prev < 0)) {
      roots.push_back(bisect(spec, s, x_prev, x, f_prev));
    }
    x_prev = x;
    f_prev = f;
  }
}

AnsatzSolution solve_at_root(const GluedTreesSpec& spec, double s, double x) {
  const double ap = spec.alpha / s;
  const double bp = spec.alpha / (1.0 - s);
  const double xi = 1.0 / x;
  const int n = spec.n;

  AnsatzSolution sol;
  sol.x = x;
  sol.q = std::log(x);
  sol.e_rescaled = -(x + xi);
  sol.energy = s * (1.0 - s) * sol.e_rescaled;

  // Rows 1-3 solved exactly with b = 1; row 4 vanishes at the root.
  double b = 1.0;
  double a = -(x - ap) / (xi - ap);
  const double rd = -(xi - bp) / (x - bp);
  const double x_m2n = std::pow(xi, 2 * n);
  double c = (a * x + b * x_m2n * xi) / (std::sqrt(2.0) * (1.0 + rd * x_m2n));
  double d = rd * c;

  // Normalize by the column profile norm.
  double norm2 = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double g = a * std::pow(x, j) + b * std::pow(xi, j);
    norm2 += g * g;
  }
  for (int j = n + 1; j <= 2 * n + 1; ++j) {
    const int r = 2 * n + 1 - j;
    const double g = c * std::pow(x, r) + d * std::pow(xi, r);
    norm2 += g * g;
  }
  const double scale = 1.0 / std::sqrt(norm2);
  sol.a = a * scale;
  sol.b = b * scale;
  sol.c = c * scale;
  sol.d = d * scale;

  Eigen::Matrix4d m = boundary_matrix(spec, s, x);
  for (int r = 0; r < 4; ++r) {
    const double rmax = m.row(r).cwiseAbs().maxCoeff();
    if (rmax > 0) m.row(r) /= rmax;
  }
  const Eigen::Vector4d v(sol.a, sol.b, sol.c, sol.d);
  sol.residual = (m * v).norm() / v.norm();
  return sol;
}

}  // namespace

std::vector<AnsatzSolution> ansatz_roots(const GluedTreesSpec& spec,
                                         double s) {
  validate(spec);
  if (!(s > 0.0 && s < spec.alpha)) {
    throw std::domain_error("ansatz_roots requires 0 < s < alpha");
  }
  const double ap = spec.alpha / s;
  const double r2 = std::sqrt(2.0);
  const double eps_c = std::pow(2.0, -0.5 * spec.n);

  std::vector<double> roots;
  // Fine windows around the asymptotic root locations.
  scan_window(spec, s, std::max(1.0 + 1e-12, r2 * (1.0 - 12.0 * eps_c)),
              r2 * (1.0 + 12.0 * eps_c), 4096, roots);
  const double eps_a = 10.0 * std::pow(s / spec.alpha, spec.n) + 1e-9;
  scan_window(spec, s, std::max(1.0 + 1e-12, ap * (1.0 - eps_a)),
              ap * (1.0 + eps_a), 4096, roots);
  // Coarse global sweep to catch anything the targeted windows miss.
  scan_window(spec, s, 1.0 + 1e-9, std::max(r2, ap) + 1.0, 2000, roots);

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique_roots;
  for (double r : roots) {
    if (unique_roots.empty() || r - unique_roots.back() > 1e-9 * r) {
      unique_roots.push_back(r);
    }
  }
  if (unique_roots.empty()) {
    throw NumericError(
        "ansatz_roots: no sign change found; brackets were [" +
        std::to_string(r2 * (1.0 - 12.0 * eps_c)) + ", " +
        std::to_string(r2 * (1.0 + 12.0 * eps_c)) + "] and around alpha/s = " +
        std::to_string(ap));
  }

  std::vector<AnsatzSolution> out;
  out.reserve(unique_roots.size());
  for (auto it = unique_roots.rbegin(); it != unique_roots.rend(); ++it) {
    out.push_back(solve_at_root(spec, s, *it));
  }
  return out;  // largest x (lowest energy) first
}

ColumnState ansatz_column_state(const GluedTreesSpec& spec, double /*s*/,
                                const AnsatzSolution& sol) {
  const int n = spec.n;
  ColumnState st;
  st.gammas.resize(spec.num_columns());
  for (int j = 0; j <= n; ++j) {
    st.gammas[j] = sol.a * std::pow(sol.x, j) + sol.b * std::pow(sol.x, -j);
  }
  for (int j = n + 1; j <= 2 * n + 1; ++j) {
    const int r = 2 * n + 1 - j;
    st.gammas[j] = sol.c * std::pow(sol.x, r) + sol.d * std::pow(sol.x, -r);
  }
  const double nm = st.norm();
  for (double& g : st.gammas) g /= nm;
  return st;
}

ColumnState column_state(const GluedTreesSpec& spec, double s, Branch branch,
                         ColumnStateMode mode, bool allow_near_crossing) {
  validate(spec);
  const double sc = spec.crossing_s();
  if ((std::abs(s - sc) < 1e-6 || std::abs(s - (1.0 - sc)) < 1e-6) &&
      !allow_near_crossing) {
    throw std::domain_error(
        "column_state: s is within 1e-6 of a crossing; branch labels are "
        "ambiguous there, pass allow_near_crossing to accept energy ordering");
  }
  if (mode == ColumnStateMode::numeric) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        column_hamiltonian(spec, s));
    if (es.info() != Eigen::Success) {
      throw NumericError("column eigensolve failed");
    }
    const int idx = branch == Branch::ground ? 0 : 1;
    ColumnState st;
    st.gammas.resize(spec.num_columns());
    for (int j = 0; j < spec.num_columns(); ++j) {
      st.gammas[j] = es.eigenvectors()(j, idx);
    }
    // Sign convention: gamma_0 >= 0.
    if (st.gammas[0] < 0) {
      for (double& g : st.gammas) g = -g;
    }
    return st;
  }
  const auto roots = ansatz_roots(spec, s);
  if (branch == Branch::first_excited && roots.size() < 2) {
    throw NumericError("ansatz mode found no first-excited bound state");
  }
  const auto& sol = roots[branch == Branch::ground ? 0 : 1];
  ColumnState st = ansatz_column_state(spec, s, sol);
  if (st.gammas[0] < 0) {
    for (double& g : st.gammas) g = -g;
  }
  return st;
}

NameSample sample_names(const GluedTreesSpec& spec) {
  validate(spec);
  Rng rng(spec.name_seed);
  const int bits = 2 * spec.n;
  const std::uint64_t space = std::uint64_t{1} << bits;
  const std::uint64_t m = spec.num_vertices();

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  std::vector<std::uint64_t> names;
  names.reserve(m);
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 100 * m + 1000;
  while (names.size() < m) {
    if (++attempts > max_attempts) {
      throw NumericError("sample_names: too many duplicate draws");
    }
    const std::uint64_t w = uniform_u64_below(rng, space);
    if (seen.insert(w).second) names.push_back(w);
  }

  NameSample sample;
  sample.n = spec.n;
  sample.distances.resize(spec.num_columns());
  const std::uint64_t w0 = names[0];
  std::size_t next = 0;
  for (int j = 0; j < spec.num_columns(); ++j) {
    const std::uint64_t cnt = spec.column_size(j);
    sample.distances[j].reserve(cnt);
    for (std::uint64_t i = 0; i < cnt; ++i) {
      sample.distances[j].push_back(popcount64(names[next++] ^ w0));
    }
  }
  return sample;
}

ObservableStats observable_stats(const NameSample& sample,
                                 const ColumnState& state) {
  if (state.gammas.size() != sample.distances.size()) {
    throw std::domain_error("observable_stats: column count mismatch");
  }
  const double nn = 2.0 * sample.n;
  double mean = 0.0, second = 0.0;
  const double nrm = state.norm();
  for (std::size_t j = 0; j < sample.distances.size(); ++j) {
    double col_mean = 0.0, col_second = 0.0;
    for (int d : sample.distances[j]) {
      const double a = nn - 2.0 * d;
      col_mean += a;
      col_second += a * a;
    }
    const double cnt = static_cast<double>(sample.distances[j].size());
    col_mean /= cnt;
    col_second /= cnt;
    const double w = (state.gammas[j] / nrm) * (state.gammas[j] / nrm);
    mean += w * col_mean;
    second += w * col_second;
  }
  return {mean, second - mean * mean};
}

ObservableStats observable_stats(const GluedTreesSpec& spec,
                                 const ColumnState& state) {
  if (static_cast<int>(state.gammas.size()) != spec.num_columns()) {
    throw std::domain_error("observable_stats: column count mismatch");
  }
  return observable_stats(sample_names(spec), state);
}

namespace {

// Exact binomial coefficients; integers stay below 2^53 for n <= 50.
std::vector<double> binomial_row(int n) {
  std::vector<double> row(n + 1, 0.0);
  row[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    for (int k = i; k >= 1; --k) row[k] += row[k - 1];
  }
  return row;
}

}  // namespace

TailReport binomial_tail(int n, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("epsilon must lie in (0, 1)");
  }
  if (n < 1 || n > 50) {
    throw std::domain_error("binomial_tail exact mode supports 1 <= n <= 50");
  }
  const auto row = binomial_row(n);
  const double total = std::pow(2.0, n);
  double exc = 0.0;
  for (int k = 0; k <= n; ++k) {
    // strict: |k - n/2| > eps n / 2  <=>  |2k - n| > eps n
    if (std::abs(2.0 * k - n) > epsilon * n) exc += row[k];
  }
  const double h = (1.0 + epsilon) * std::log1p(epsilon) +
                   (1.0 - epsilon) * std::log1p(-epsilon);
  const double bound =
      2.0 / total +
      std::sqrt(2.0 * (1.0 - epsilon) * n / (M_PI * (1.0 + epsilon))) *
          std::exp(-0.5 * h * n + 1.0 / (12.0 * n));
  return {n, epsilon, exc / total, bound};
}

double collision_union_bound(const GluedTreesSpec& spec, int k_cutoff) {
  const auto row = binomial_row(std::min(2 * spec.n, 50));
  if (2 * spec.n > 50) {
    throw std::domain_error("collision_union_bound supports 2n <= 50");
  }
  double l = 0.0;
  for (int k = 1; k <= k_cutoff && k <= 2 * spec.n; ++k) l += row[k];
  const double big_n = std::pow(2.0, 2 * spec.n);
  const double m = static_cast<double>(spec.num_vertices());
  return l * m / (big_n - l);
}

double collision_probability_mc(const GluedTreesSpec& spec, int k_cutoff,
                                int trials, Rng& rng) {
  validate(spec);
  if (trials < 100) throw std::domain_error("trials must be >= 100");
  const int bits = 2 * spec.n;
  const std::uint64_t space = std::uint64_t{1} << bits;
  const std::uint64_t m = spec.num_vertices();

  int hits = 0;
  std::unordered_set<std::uint64_t> seen;
  for (int t = 0; t < trials; ++t) {
    seen.clear();
    const std::uint64_t w0 = uniform_u64_below(rng, space);
    seen.insert(w0);
    bool close = false;
    std::uint64_t drawn = 1;
    while (drawn < m) {
      const std::uint64_t w = uniform_u64_below(rng, space);
      if (!seen.insert(w).second) continue;
      ++drawn;
      if (popcount64(w ^ w0) <= k_cutoff) close = true;
    }
    if (close) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace macrosup
