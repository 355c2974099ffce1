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

#include "macrosup/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace macrosup {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t family_stream(const std::string& family, int n) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : family) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return h ^ (static_cast<std::uint64_t>(n) << 32);
}

const std::vector<std::string> kSweepFamilies = {"grover", "dj", "bv",
                                                 "simon", "glued"};

}  // namespace

void RunConfig::validate_common() const {
  if (n_min < 1 || n_max < n_min) {
    throw ConfigError("n-range [" + std::to_string(n_min) + ", " +
                      std::to_string(n_max) + "] is empty or invalid");
  }
  if (s_points < 2) throw ConfigError("s-points must be >= 2");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (format != "csv" && format != "json") {
    throw ConfigError("format must be csv or json");
  }
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw ConfigError("alpha must lie in (0, 1/2)");
  }
  if (instances != "all" && instances.rfind("random:", 0) != 0) {
    throw ConfigError("instances must be 'all' or 'random:K'");
  }
  if (explicit_random()) {
    if (sample_count() < 1) throw ConfigError("random:K needs K >= 1");
    if (!seed) throw ConfigError("random sampling requires an explicit --seed");
  }
}

bool RunConfig::explicit_random() const {
  return instances.rfind("random:", 0) == 0;
}

int RunConfig::sample_count() const {
  if (explicit_random()) {
    const std::string k = instances.substr(7);
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos) {
      throw ConfigError("instances must be 'all' or 'random:K' with K >= 1");
    }
    try {
      return std::stoi(k);
    } catch (const std::exception&) {
      throw ConfigError("random:K count out of range: " + k);
    }
  }
  return 64;
}

namespace {

// Instance labels for one (family, n). Sampling is derived from the run
// seed and (family, n) only, so results are independent of worker count
// and task order. BV/Simon exclude a = 0.
std::vector<std::uint64_t> enumerate_instances(const RunConfig& config,
                                               const std::string& family,
                                               int n) {
  const bool nonzero = (family == "bv" || family == "simon");
  const std::uint64_t space = dim_of(n);
  const std::uint64_t lo = nonzero ? 1 : 0;
  const bool exhaustive = !config.explicit_random() && space <= 256;
  std::vector<std::uint64_t> out;
  if (exhaustive) {
    for (std::uint64_t v = lo; v < space; ++v) out.push_back(v);
    return out;
  }
  const int k = config.sample_count();
  Rng rng(mix(config.seed.value_or(0), family_stream(family, n)));
  for (int i = 0; i < k; ++i) {
    out.push_back(lo + uniform_u64_below(rng, space - lo));
  }
  return out;
}

struct PointValue {
  double e_max = 0.0;
  double max_variance = 0.0;
  double gap = 0.0;
};

PointValue statevector_point(const PureState& state, double gap) {
  const Vcm v = build_vcm(state);
  const MaxEigenpair top = max_eigenpair(v);
  PointValue pv;
  pv.e_max = top.e_max;
  // Independent route: the Rayleigh quotient of the reconstructed
  // observable, which must reproduce e_max.
  pv.max_variance = observable_variance(state, top.u_max);
  pv.gap = gap;
  return pv;
}

// One sweep task covers every grid point of one glued instance, so the
// name set is drawn once.
std::vector<PointValue> glued_points(const RunConfig& config, int n,
                                     std::uint64_t inst,
                                     const std::vector<double>& s_values) {
  GluedTreesSpec spec;
  spec.n = n;
  spec.alpha = config.alpha;
  spec.name_seed = mix(config.seed.value_or(0), inst);
  const NameSample sample = sample_names(spec);
  std::vector<PointValue> out;
  out.reserve(s_values.size());
  for (double s : s_values) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        column_hamiltonian(spec, s));
    if (es.info() != Eigen::Success) throw NumericError("glued eigensolve");
    ColumnState ground;
    ground.gammas.resize(spec.num_columns());
    for (int j = 0; j < spec.num_columns(); ++j) {
      ground.gammas[j] = es.eigenvectors()(j, 0);
    }
    const ObservableStats stats = observable_stats(sample, ground);
    PointValue pv;
    // Rayleigh lower bound on the (2n-site) VCM e_max from the unit-
    // normalized coefficient table of A-hat: variance / (2n).
    pv.e_max = stats.variance / (2.0 * n);
    pv.max_variance = stats.variance;
    pv.gap = es.eigenvalues()(1) - es.eigenvalues()(0);
    out.push_back(pv);
  }
  return out;
}

std::vector<PointValue> sweep_points(const RunConfig& config,
                                     const std::string& family, int n,
                                     std::uint64_t inst,
                                     const std::vector<double>& s_values) {
  if (family == "glued") return glued_points(config, n, inst, s_values);
  std::vector<PointValue> out;
  out.reserve(s_values.size());
  for (double s : s_values) {
    if (family == "grover") {
      out.push_back(statevector_point(grover_ground_state(n, inst, s),
                                      grover_gap(n, s)));
    } else if (family == "dj") {
      out.push_back(statevector_point(
          dj_ground_state(n, static_cast<int>(inst), s), dj_gap(s)));
    } else if (family == "bv") {
      out.push_back(
          statevector_point(bv_ground_state(n, inst, s), bv_gap(s)));
    } else if (family == "simon") {
      out.push_back(
          statevector_point(simon_ground_state(n, inst, s), simon_gap(s)));
    } else {
      throw ConfigError("unknown family: " + family);
    }
  }
  return out;
}

std::vector<std::uint64_t> family_instances(const RunConfig& config,
                                            const std::string& family,
                                            int n) {
  if (family == "dj") return {1, 0};
  if (family == "glued") {
    const int k = config.explicit_random() ? config.sample_count() : 20;
    std::vector<std::uint64_t> out(k);
    for (int i = 0; i < k; ++i) out[i] = static_cast<std::uint64_t>(i);
    return out;
  }
  return enumerate_instances(config, family, n);
}

template <typename Task, typename Fn>
void parallel_tasks(const std::vector<Task>& tasks, int workers, Fn&& fn) {
  const std::int64_t total = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic)
  for (std::int64_t i = 0; i < total; ++i) {
    fn(static_cast<std::size_t>(i));
  }
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& config) {
  config.validate_common();
  const std::string family = config.command;
  if (std::find(kSweepFamilies.begin(), kSweepFamilies.end(), family) ==
      kSweepFamilies.end()) {
    throw ConfigError("sweep family must be one of grover|dj|bv|simon|glued");
  }

  std::vector<double> grid(config.s_points);
  for (int i = 0; i < config.s_points; ++i) {
    grid[i] =
        static_cast<double>(i) / static_cast<double>(config.s_points - 1);
  }

  // Task granularity: one (n, instance, s) point per task, except glued,
  // where one task covers the whole grid of an instance (one name sample).
  struct Task {
    int n;
    std::uint64_t inst;
    std::vector<double> s_values;
    std::string label;
  };
  std::vector<Task> tasks;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const auto insts = family_instances(config, family, n);
    for (std::uint64_t inst : insts) {
      std::string label = family == "dj"
                              ? (inst ? "constant" : "balanced")
                              : std::to_string(inst);
      if (family == "glued") {
        tasks.push_back({n, inst, grid, std::move(label)});
      } else {
        for (double s : grid) {
          tasks.push_back({n, inst, {s}, label});
        }
      }
    }
  }

  std::vector<std::vector<SweepRow>> results(tasks.size());
  const std::uint64_t seed = config.seed.value_or(0);
  parallel_tasks(tasks, config.workers, [&](std::size_t i) {
    const Task& t = tasks[i];
    const auto points = sweep_points(config, family, t.n, t.inst, t.s_values);
    results[i].reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      results[i].push_back(SweepRow{family, t.n, t.label, t.s_values[k],
                                    points[k].e_max, points[k].max_variance,
                                    points[k].gap, seed});
    }
  });
  std::vector<SweepRow> rows;
  rows.reserve(tasks.size() * grid.size());
  for (auto& chunk : results) {
    rows.insert(rows.end(), chunk.begin(), chunk.end());
  }

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    // numeric instance labels sort by value, not lexicographically
    auto key = [](const std::string& label) {
      if (!label.empty() && label.find_first_not_of("0123456789") ==
                                std::string::npos) {
        return std::pair<int, std::uint64_t>(0, std::stoull(label));
      }
      return std::pair<int, std::uint64_t>(1, 0);
    };
    return std::tuple(a.family, a.n, key(a.instance), a.instance, a.s) <
           std::tuple(b.family, b.n, key(b.instance), b.instance, b.s);
  });
  return rows;
}

namespace {

// Value of one instance at the family's p-maximizing point.
double scaling_value(const RunConfig& config, const std::string& family,
                     int n, std::uint64_t inst) {
  if (family == "grover") {
    const Vcm v = build_vcm(grover_ground_state(n, inst, 0.5));
    return max_eigenpair(v).e_max;
  }
  if (family == "dj") {
    double best = 0.0;
    for (int i = 0; i < config.s_points; ++i) {
      const double s =
          static_cast<double>(i) / static_cast<double>(config.s_points - 1);
      const Vcm v = build_vcm(dj_ground_state(n, static_cast<int>(inst), s));
      best = std::max(best, max_eigenpair(v).e_max);
    }
    return best;
  }
  if (family == "bv") {
    const Vcm v = build_vcm(bv_state_s1(n, inst));
    return max_eigenpair(v).e_max;
  }
  if (family == "simon") {
    Rng rng(mix(config.seed.value_or(0), mix(inst, n)));
    const std::uint64_t w_star = uniform_u64_below(rng, dim_of(n));
    const Vcm v = build_vcm(simon_post_state(n, inst, w_star));
    return max_eigenpair(v).e_max;
  }
  if (family == "glued") {
    GluedTreesSpec spec;
    spec.n = n;
    spec.alpha = config.alpha;
    spec.name_seed = mix(config.seed.value_or(0), inst);
    const ColumnState ground = column_state(
        spec, spec.crossing_s(), Branch::ground, ColumnStateMode::numeric,
        /*allow_near_crossing=*/true);
    return observable_stats(spec, ground).variance / (2.0 * n);
  }
  throw ConfigError("unknown family: " + family);
}

}  // namespace

FamilyScaling run_family_scaling(const RunConfig& config,
                                 const std::string& family) {
  config.validate_common();
  FamilyScaling out;
  out.family = family;
  try {
    struct Task {
      int n;
      std::uint64_t inst;
      std::string label;
    };
    std::vector<Task> tasks;
    for (int n = config.n_min; n <= config.n_max; ++n) {
      // Simon instances need n >= 2.
      if (family == "simon" && n < 2) continue;
      for (std::uint64_t inst : family_instances(config, family, n)) {
        std::string label = family == "dj"
                                ? (inst ? "constant" : "balanced")
                                : std::to_string(inst);
        tasks.push_back({n, inst, std::move(label)});
      }
    }
    std::vector<double> values(tasks.size());
    parallel_tasks(tasks, config.workers, [&](std::size_t i) {
      values[i] = scaling_value(config, family, tasks[i].n, tasks[i].inst);
    });

    std::map<int, std::vector<double>> by_n;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      out.values.push_back({tasks[i].n, tasks[i].label, values[i]});
      by_n[tasks[i].n].push_back(values[i]);
    }
    for (const auto& [n, vals] : by_n) {
      out.medians.push_back({n, "median", median(vals)});
      out.exceptional_fraction.emplace_back(n, exceptional_fraction(vals));
    }
    const PeFit fit = fit_p_e(out.medians);
    out.p_e = fit.p_e;
    out.stderr_value = fit.stderr_value;
    out.verdict = decide_verdict(fit.p_e, fit.stderr_value,
                                 static_cast<int>(out.medians.size()));
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<Table1Row> run_table1(const RunConfig& config) {
  config.validate_common();
  struct FamilyPlan {
    const char* family;
    const char* note;
    int n_min;
    int n_max;
  };
  // Default per-family ranges keep every pipeline at desk scale.
  static constexpr FamilyPlan kPlans[] = {
      {"grover", "achieved (quadratic)", 4, 12},
      {"dj", "not achieved", 2, 12},
      {"bv", "achieved (polynomial)", 4, 12},
      {"simon", "achieved (exponential)", 3, 7},
      {"glued", "achieved (exponential)", 4, 16},
  };
  std::vector<Table1Row> rows;
  for (const auto& plan : kPlans) {
    RunConfig sub = config;
    sub.command = "scaling";
    sub.n_min = plan.n_min;
    sub.n_max = plan.n_max;
    const FamilyScaling fs = run_family_scaling(sub, plan.family);
    Table1Row row;
    row.family = plan.family;
    row.speedup_note = plan.note;
    row.p_e = fs.p_e;
    row.stderr_value = fs.stderr_value;
    row.verdict = fs.error.empty() ? to_string(fs.verdict) : "error";
    row.error = fs.error;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TraceRow> run_evolve_cmd(const RunConfig& config) {
  config.validate_common();
  const int n = config.n_min;
  EvolveOptions opt;
  opt.dt = config.dt;
  opt.record_points = config.s_points;

  if (config.family == "glued") {
    GluedTreesSpec spec;
    spec.n = n;
    spec.alpha = config.alpha;
    spec.name_seed = config.seed.value_or(0);
    auto [state, trace] =
        evolve_glued(spec, Schedule::linear(config.total_time), opt);
    return trace.rows;
  }

  InstanceSpec spec = GroverSpec{n, config.instance_value};
  if (config.family == "dj") {
    spec = DJSpec{n, static_cast<int>(config.instance_value)};
  } else if (config.family == "bv") {
    spec = BVSpec{n, config.instance_value};
  } else if (config.family == "simon") {
    spec = SimonSpec{n, config.instance_value};
  } else if (config.family != "grover") {
    throw ConfigError("unknown evolve family: " + config.family);
  }

  Schedule sch = Schedule::linear(config.total_time);
  if (config.schedule == "local") {
    if (config.family != "grover") {
      throw ConfigError("the local adiabatic schedule is Grover-specific");
    }
    sch = Schedule::local_adiabatic_grover(n, config.delta);
  } else if (config.schedule != "linear") {
    throw ConfigError("schedule must be linear or local");
  }

  auto [state, trace] = evolve(spec, sch, opt);
  return trace.rows;
}

}  // namespace macrosup
