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

#include <optional>
#include <string>
#include <vector>

#include "macrosup/evolve.hpp"
#include "macrosup/scaling.hpp"

namespace macrosup {

/// Parsed command-line configuration shared by all subcommands.
struct RunConfig {
  std::string command = "table1";
  int n_min = 4;
  int n_max = 8;
  int s_points = 21;
  std::string instances = "all";  // "all" | "random:K"
  std::optional<std::uint64_t> seed;
  double alpha = 0.4;
  std::string format = "csv";  // csv | json
  std::string out;             // empty -> stdout
  int workers = 1;

  // evolve subcommand extras
  std::string family = "grover";
  std::uint64_t instance_value = 1;
  std::string schedule = "linear";  // linear | local
  double total_time = 20.0;
  double dt = 0.05;
  double delta = 0.25;

  void validate_common() const;
  /// Instance budget per n: exhaustive when 2^n <= 256, else 64 sampled
  /// (random:K overrides the sampled count).
  int sample_count() const;
  bool explicit_random() const;
};

/// One sweep output row; the CSV schema is fixed:
/// family,n,instance,s,e_max,max_variance,gap,seed
struct SweepRow {
  std::string family;
  int n = 0;
  std::string instance;
  double s = 0.0;
  double e_max = 0.0;
  double max_variance = 0.0;
  double gap = 0.0;
  std::uint64_t seed = 0;
};

std::vector<SweepRow> run_sweep(const RunConfig& config);

/// Scaling pipeline output for one family: per-instance values at the
/// family's p-maximizing point, per-n medians, the log-log fit, and the
/// exceptional-instance fraction per n.
struct FamilyScaling {
  std::string family;
  std::vector<ScalingRow> values;   // every sampled instance
  std::vector<ScalingRow> medians;  // one row per n
  std::vector<std::pair<int, double>> exceptional_fraction;
  double p_e = 0.0;
  double stderr_value = 0.0;
  PVerdict verdict = PVerdict::indeterminate;
  std::string error;  // nonempty when this family's pipeline failed
};

FamilyScaling run_family_scaling(const RunConfig& config,
                                 const std::string& family);

struct Table1Row {
  std::string family;
  std::string speedup_note;
  double p_e = 0.0;
  double stderr_value = 0.0;
  std::string verdict;
  std::string error;
};

/// Per-family pipelines at their p-maximizing points over built-in
/// desk-scale n-ranges; emits the verdict table.
std::vector<Table1Row> run_table1(const RunConfig& config);

std::vector<TraceRow> run_evolve_cmd(const RunConfig& config);

}  // namespace macrosup
