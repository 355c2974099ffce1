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

#include "macrosup/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "macrosup/measure.hpp"
#include "macrosup/pauli_kernels.hpp"
#include "macrosup/scaling.hpp"

namespace macrosup {

Schedule Schedule::linear(double total_time) {
  if (!(total_time > 0.0)) throw std::domain_error("total_time must be > 0");
  Schedule sch;
  sch.kind = Kind::linear;
  sch.total_time = total_time;
  return sch;
}

Schedule Schedule::local_adiabatic_grover(int n, double delta) {
  check_num_qubits(n);
  if (!(delta > 0.0)) throw std::domain_error("delta must be > 0");
  const double N = static_cast<double>(dim_of(n));
  Schedule sch;
  sch.kind = Kind::local_adiabatic_grover;
  sch.delta = delta;
  sch.grover_n = n;
  // T = int_0^1 ds / (delta DeltaE(s)^2)
  //   = N / (delta sqrt(N-1)) * arctan(sqrt(N-1)).
  sch.total_time =
      N / (delta * std::sqrt(N - 1.0)) * std::atan(std::sqrt(N - 1.0));
  return sch;
}

double Schedule::s_at(double t) const {
  const double tc = std::clamp(t, 0.0, total_time);
  if (kind == Kind::linear) return tc / total_time;
  const double N = static_cast<double>(dim_of(grover_n));
  const double rt = std::sqrt(N - 1.0);
  const double c = 2.0 * delta * rt / N;
  const double s = 0.5 + std::tan(c * tc - std::atan(rt)) / (2.0 * rt);
  return std::clamp(s, 0.0, 1.0);
}

namespace {

PureState initial_state(const InstanceSpec& spec) {
  // All four families start in the uniform superposition of their full
  // register (the product of |+>'s).
  return PureState::uniform_superposition(total_qubits(spec));
}

// One classical RK4 step of d psi/dt = -i H(s(t)) psi.
void rk4_step(const InstanceSpec& spec, const Schedule& sch, double t,
              double dt, PureState& psi) {
  const Complex mi{0.0, -1.0};
  PureState k1 = hamiltonian_apply(spec, sch.s_at(t), psi);
  scale(k1, mi);

  PureState y = psi;
  add_scaled(y, 0.5 * dt, k1);
  PureState k2 = hamiltonian_apply(spec, sch.s_at(t + 0.5 * dt), y);
  scale(k2, mi);

  y = psi;
  add_scaled(y, 0.5 * dt, k2);
  PureState k3 = hamiltonian_apply(spec, sch.s_at(t + 0.5 * dt), y);
  scale(k3, mi);

  y = psi;
  add_scaled(y, dt, k3);
  PureState k4 = hamiltonian_apply(spec, sch.s_at(t + dt), y);
  scale(k4, mi);

  add_scaled(psi, dt / 6.0, k1);
  add_scaled(psi, dt / 3.0, k2);
  add_scaled(psi, dt / 3.0, k3);
  add_scaled(psi, dt / 6.0, k4);
}

// Ground spinor of the shared BV/Simon sector field ((1-s), 0, +-s).
std::array<double, 2> sector_spinor(int f, double s) {
  const double hx = 1.0 - s;
  const double hz = (f == 0 ? 1.0 : -1.0) * s;
  const double h = std::sqrt(hx * hx + hz * hz);
  const double c = hz / h;
  return {std::sqrt(0.5 * (1.0 + c)), std::sqrt(0.5 * (1.0 - c))};
}

}  // namespace

double ground_band_overlap(const InstanceSpec& spec, double s,
                           const PureState& psi) {
  return std::visit(
      [&](const auto& sp) -> double {
        using T = std::decay_t<decltype(sp)>;
        if constexpr (std::is_same_v<T, GroverSpec>) {
          return std::norm(
              inner_product(grover_ground_state(sp.n, sp.w_star, s), psi));
        } else if constexpr (std::is_same_v<T, DJSpec>) {
          return std::norm(
              inner_product(dj_ground_state(sp.n, sp.mu_f, s), psi));
        } else if constexpr (std::is_same_v<T, BVSpec>) {
          // N-fold degenerate band |w> (x) chi_{f(w)}: project each
          // ancilla pair on its sector spinor.
          const auto chi0 = sector_spinor(0, s);
          const auto chi1 = sector_spinor(1, s);
          const auto a = psi.amplitudes();
          double acc = 0.0;
          for (std::uint64_t w = 0; w < dim_of(sp.n); ++w) {
            const auto& chi = bv_f(sp.a, w) == 0 ? chi0 : chi1;
            acc += std::norm(chi[0] * a[w << 1] + chi[1] * a[(w << 1) | 1u]);
          }
          return acc;
        } else {
          const SimonOracle oracle(sp.n, sp.a);
          const int m = sp.n - 1;
          const auto chi0 = sector_spinor(0, s);
          const auto chi1 = sector_spinor(1, s);
          const auto a = psi.amplitudes();
          double acc = 0.0;
          for (std::uint64_t w = 0; w < dim_of(sp.n); ++w) {
            const std::uint64_t gw = oracle.g(w);
            Complex amp{0, 0};
            for (std::uint64_t b = 0; b < dim_of(m); ++b) {
              double prod = 1.0;
              for (int bit = 0; bit < m; ++bit) {
                const int gbit = static_cast<int>((gw >> bit) & 1u);
                const int bbit = static_cast<int>((b >> bit) & 1u);
                prod *= (gbit == 0 ? chi0 : chi1)[bbit];
              }
              amp += prod * a[(w << m) | b];
            }
            acc += std::norm(amp);
          }
          return acc;
        }
      },
      spec);
}

double first_excited_band_overlap(const InstanceSpec& spec, double s,
                                  const PureState& psi) {
  return std::visit(
      [&](const auto& sp) -> double {
        using T = std::decay_t<decltype(sp)>;
        if constexpr (std::is_same_v<T, GroverSpec>) {
          // The other eigenvector inside span{|w*>, |phi>}.
          const PureState g = grover_ground_state(sp.n, sp.w_star, s);
          PureState e = PureState::basis_state(sp.n, sp.w_star);
          const Complex ov = inner_product(g, e);
          add_scaled(e, -ov, g);
          const double nm = e.norm();
          if (nm < 1e-9) return 0.0;  // s = 0: |w*> is (nearly) the ground
          scale(e, 1.0 / nm);
          return std::norm(inner_product(e, psi));
        } else if constexpr (std::is_same_v<T, DJSpec>) {
          const PureState g = dj_ground_state(sp.n, sp.mu_f, s);
          PureState e = dj_beta_f(sp.n, sp.mu_f);
          const Complex ov = inner_product(g, e);
          add_scaled(e, -ov, g);
          const double nm = e.norm();
          if (nm < 1e-9) return 0.0;
          scale(e, 1.0 / nm);
          return std::norm(inner_product(e, psi));
        } else if constexpr (std::is_same_v<T, BVSpec>) {
          const auto chi0 = sector_spinor(0, s);
          const auto chi1 = sector_spinor(1, s);
          const auto a = psi.amplitudes();
          double acc = 0.0;
          for (std::uint64_t w = 0; w < dim_of(sp.n); ++w) {
            // orthogonal spinor (-chi1, chi0)
            const auto& chi = bv_f(sp.a, w) == 0 ? chi0 : chi1;
            acc += std::norm(-chi[1] * a[w << 1] + chi[0] * a[(w << 1) | 1u]);
          }
          return acc;
        } else {
          // One flipped spinor mode per second-register site.
          const SimonOracle oracle(sp.n, sp.a);
          const int m = sp.n - 1;
          const auto chi0 = sector_spinor(0, s);
          const auto chi1 = sector_spinor(1, s);
          const auto a = psi.amplitudes();
          double acc = 0.0;
          for (std::uint64_t w = 0; w < dim_of(sp.n); ++w) {
            const std::uint64_t gw = oracle.g(w);
            for (int flip = 0; flip < m; ++flip) {
              Complex amp{0, 0};
              for (std::uint64_t b = 0; b < dim_of(m); ++b) {
                double prod = 1.0;
                for (int bit = 0; bit < m; ++bit) {
                  const int gbit = static_cast<int>((gw >> bit) & 1u);
                  const int bbit = static_cast<int>((b >> bit) & 1u);
                  const auto& chi = gbit == 0 ? chi0 : chi1;
                  if (bit == flip) {
                    prod *= (bbit == 0 ? -chi[1] : chi[0]);
                  } else {
                    prod *= chi[bbit];
                  }
                }
                amp += prod * a[(w << m) | b];
              }
              acc += std::norm(amp);
            }
          }
          return acc;
        }
      },
      spec);
}

std::pair<PureState, EvolutionTrace> evolve(const InstanceSpec& spec,
                                            const Schedule& schedule,
                                            const EvolveOptions& options) {
  validate(spec);
  const double hbound = hamiltonian_norm_bound(spec);
  if (options.dt * hbound > 0.1 + 1e-12) {
    throw std::domain_error("dt ||H|| must be <= 0.1; need dt <= " +
                            std::to_string(0.1 / hbound));
  }
  const double T = schedule.total_time;
  const std::int64_t steps =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(T / options.dt)));
  const double dt = T / static_cast<double>(steps);

  PureState psi = initial_state(spec);
  EvolutionTrace trace;
  const int rp = std::max(2, options.record_points);

  std::int64_t next_record = 0;
  for (std::int64_t step = 0; step <= steps; ++step) {
    const double t = dt * static_cast<double>(step);
    if (step * (rp - 1) >= next_record * steps) {
      const double s = schedule.s_at(t);
      TraceRow row;
      row.t = t;
      row.s = s;
      if (options.track_overlaps) {
        row.ground_overlap = ground_band_overlap(spec, s, psi);
        row.first_excited_overlap = first_excited_band_overlap(spec, s, psi);
      }
      row.energy = inner_product(psi, hamiltonian_apply(spec, s, psi)).real();
      trace.rows.push_back(row);
      ++next_record;

      const double drift = std::abs(psi.norm() - 1.0);
      trace.max_norm_drift = std::max(trace.max_norm_drift, drift);
      if (drift > 1e-6) {
        throw NumericError(
            "norm drift " + std::to_string(drift) +
            " exceeds 1e-6; reduce the step to dt = " +
            std::to_string(0.5 * options.dt));
      }
    }
    if (step < steps) rk4_step(spec, schedule, t, dt, psi);
  }
  return {std::move(psi), std::move(trace)};
}

std::pair<Eigen::VectorXcd, EvolutionTrace> evolve_glued(
    const GluedTreesSpec& spec, const Schedule& schedule,
    const EvolveOptions& options) {
  validate(spec);
  // ||H(s)|| <= alpha max(s, 1-s) + s(1-s) ||T||, and by Gershgorin
  // ||T|| <= 1 + sqrt(2).
  const double hbound = spec.alpha + 0.25 * (1.0 + std::sqrt(2.0));
  if (options.dt * hbound > 0.1 + 1e-12) {
    throw std::domain_error("dt too large for the column Hamiltonian; need "
                            "dt <= " + std::to_string(0.1 / hbound));
  }
  const double T = schedule.total_time;
  const std::int64_t steps =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(T / options.dt)));
  const double dt = T / static_cast<double>(steps);
  const int d = spec.num_columns();

  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d);
  psi(0) = 1.0;
  const Complex mi{0.0, -1.0};

  EvolutionTrace trace;
  const int rp = std::max(2, options.record_points);
  std::int64_t next_record = 0;
  for (std::int64_t step = 0; step <= steps; ++step) {
    const double t = dt * static_cast<double>(step);
    if (step * (rp - 1) >= next_record * steps) {
      const double s = schedule.s_at(t);
      const Eigen::MatrixXd h = column_hamiltonian(spec, s);
      TraceRow row;
      row.t = t;
      row.s = s;
      row.energy = (psi.adjoint() * (h * psi))(0).real();
      if (options.track_overlaps) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        row.ground_overlap =
            std::norm(es.eigenvectors().col(0).cast<Complex>().dot(psi));
        row.first_excited_overlap =
            std::norm(es.eigenvectors().col(1).cast<Complex>().dot(psi));
      }
      trace.rows.push_back(row);
      ++next_record;
      const double drift = std::abs(psi.norm() - 1.0);
      trace.max_norm_drift = std::max(trace.max_norm_drift, drift);
      if (drift > 1e-6) {
        throw NumericError("norm drift exceeds 1e-6; reduce dt to " +
                           std::to_string(0.5 * options.dt));
      }
    }
    if (step < steps) {
      const Eigen::MatrixXd h1 = column_hamiltonian(spec, schedule.s_at(t));
      const Eigen::MatrixXd h2 =
          column_hamiltonian(spec, schedule.s_at(t + 0.5 * dt));
      const Eigen::MatrixXd h3 =
          column_hamiltonian(spec, schedule.s_at(t + dt));
      const Eigen::VectorXcd k1 = mi * (h1 * psi);
      const Eigen::VectorXcd k2 = mi * (h2 * (psi + 0.5 * dt * k1));
      const Eigen::VectorXcd k3 = mi * (h2 * (psi + 0.5 * dt * k2));
      const Eigen::VectorXcd k4 = mi * (h3 * (psi + dt * k3));
      psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return {std::move(psi), std::move(trace)};
}

std::vector<std::pair<double, PureState>> instantaneous_eigenstates(
    const InstanceSpec& spec, double s, int k) {
  validate(spec);
  const int nq = total_qubits(spec);
  const Eigen::MatrixXcd h = dense_hamiltonian(spec, s);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) {
    throw NumericError("instantaneous eigensolve failed");
  }
  const int d = static_cast<int>(h.rows());
  const int kk = std::min(k, d);
  std::vector<std::pair<double, PureState>> out;
  out.reserve(kk);
  for (int i = 0; i < kk; ++i) {
    std::vector<Complex> amps(d);
    for (int j = 0; j < d; ++j) amps[j] = es.eigenvectors()(j, i);
    out.emplace_back(es.eigenvalues()(i),
                     PureState::from_amplitudes(nq, std::move(amps)));
  }
  return out;
}

namespace {

Rng derived_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
}

}  // namespace

BvEndToEndStats run_bv_end_to_end(int n, std::uint64_t a,
                                  const Schedule& schedule, double dt,
                                  int runs, std::uint64_t seed) {
  const InstanceSpec spec = BVSpec{n, a};
  EvolveOptions opt;
  opt.dt = dt;
  opt.record_points = 2;
  opt.track_overlaps = false;
  auto [final_raw, trace] = evolve(spec, schedule, opt);
  PureState final_state = final_raw;
  final_state.normalize();

  BvEndToEndStats stats;
  stats.runs = runs;
  for (int r = 0; r < runs; ++r) {
    Rng rng = derived_rng(seed, static_cast<std::uint64_t>(r));
    const MeasurementOutcome anc = measure_pauli_x(final_state, n + 1, rng);
    if (anc.value != -1) continue;
    ++stats.minus_count;
    std::uint64_t read = 0;
    PureState cur = anc.post_state;
    for (int l = 1; l <= n; ++l) {
      const MeasurementOutcome m = measure_pauli_x(cur, l, rng);
      if (m.value == -1) read |= std::uint64_t{1} << (n - l);
      cur = m.post_state;
    }
    if (read == a) ++stats.recoveries;
  }
  return stats;
}

SimonEndToEndStats run_simon_end_to_end(int n, std::uint64_t a,
                                        const Schedule& schedule, double dt,
                                        int num_seeds, int max_runs,
                                        std::uint64_t seed) {
  const InstanceSpec spec = SimonSpec{n, a};
  EvolveOptions opt;
  opt.dt = dt;
  opt.record_points = 2;
  opt.track_overlaps = false;
  auto [final_raw, trace] = evolve(spec, schedule, opt);
  PureState final_state = final_raw;
  final_state.normalize();

  std::vector<int> second_register(n - 1);
  for (int i = 0; i < n - 1; ++i) second_register[i] = n + 1 + i;

  SimonEndToEndStats stats;
  for (int sd = 0; sd < num_seeds; ++sd) {
    Rng rng = derived_rng(seed, static_cast<std::uint64_t>(sd));
    std::vector<std::uint64_t> samples;
    int used = max_runs;
    for (int run = 1; run <= max_runs; ++run) {
      const MeasurementOutcome zread =
          measure_subsystem_z(final_state, second_register, rng);
      PureState cur = zread.post_state;
      std::uint64_t x = 0;
      for (int l = 1; l <= n; ++l) {
        const MeasurementOutcome m = measure_pauli_x(cur, l, rng);
        if (m.value == -1) x |= std::uint64_t{1} << (n - l);
        cur = m.post_state;
      }
      if (parity_dot(x, a) != 0) stats.all_orthogonal = false;
      samples.push_back(x);
      const SimonRecovery rec = simon_recover(n, samples);
      if (rec.recovered && rec.a == a) {
        used = run;
        ++stats.recovered_seeds;
        break;
      }
    }
    stats.runs_to_recover.push_back(used);
  }
  std::vector<double> as_double(stats.runs_to_recover.begin(),
                                stats.runs_to_recover.end());
  stats.median_runs = median(std::move(as_double));
  return stats;
}

}  // namespace macrosup
