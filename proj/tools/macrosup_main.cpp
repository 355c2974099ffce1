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

#include <CLI11.hpp>
#include <iostream>

#include "macrosup/emit.hpp"

namespace {

using namespace macrosup;

int dispatch(const RunConfig& config) {
  // Unwritable paths must fail before any computation starts.
  ensure_writable(config.out);

  if (config.command == "table1") {
    const auto rows = run_table1(config);
    write_text(config.out, config.format == "csv"
                               ? table1_csv(rows)
                               : table1_json(config, rows).dump(2) + "\n");
    return 0;
  }
  if (config.command == "scaling") {
    std::vector<FamilyScaling> results;
    for (const char* family : {"grover", "dj", "bv", "simon", "glued"}) {
      if (config.family == "all" || config.family == family) {
        results.push_back(run_family_scaling(config, family));
      }
    }
    if (results.empty()) {
      throw ConfigError("scaling: unknown family " + config.family);
    }
    write_text(config.out, config.format == "csv"
                               ? scaling_csv(results)
                               : scaling_json(config, results).dump(2) + "\n");
    if (config.format == "csv") {
      for (const auto& fs : results) {
        std::cerr << fs.family << ": p_e = " << fs.p_e << " +- "
                  << fs.stderr_value << ", verdict "
                  << (fs.error.empty() ? to_string(fs.verdict)
                                       : "error: " + fs.error)
                  << "\n";
      }
    }
    return 0;
  }
  if (config.command == "evolve") {
    const auto rows = run_evolve_cmd(config);
    write_text(config.out, config.format == "csv"
                               ? trace_csv(rows)
                               : trace_json(config, rows).dump(2) + "\n");
    return 0;
  }
  // Family sweeps: grover | dj | bv | simon | glued.
  const auto rows = run_sweep(config);
  write_text(config.out, config.format == "csv"
                             ? sweep_csv(rows)
                             : sweep_json(config, rows).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "macrosup: macroscopic-superposition index p for adiabatic quantum "
      "algorithms (Grover, Deutsch-Jozsa, Bernstein-Vazirani, Simon, "
      "glued trees)"};
  app.require_subcommand(1);

  macrosup::RunConfig config;
  std::uint64_t seed_value = 0;
  bool seed_given = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n-min", config.n_min, "smallest problem size");
    cmd->add_option("--n-max", config.n_max, "largest problem size");
    cmd->add_option("--s-points", config.s_points, "annealing grid points");
    cmd->add_option("--instances", config.instances, "all | random:K");
    cmd->add_option("--seed", seed_value, "run seed (recorded in outputs)")
        ->each([&](const std::string&) { seed_given = true; });
    cmd->add_option("--alpha", config.alpha, "glued-trees alpha in (0, 1/2)");
    cmd->add_option("--format", config.format, "csv | json");
    cmd->add_option("--out", config.out, "output path (default stdout)");
    cmd->add_option("--workers", config.workers, "worker pool size");
  };

  for (const char* name : {"grover", "dj", "bv", "simon", "glued", "scaling",
                           "evolve", "table1"}) {
    CLI::App* cmd = app.add_subcommand(name, "");
    add_common(cmd);
    if (std::string(name) == "scaling") {
      cmd->add_option("--family", config.family,
                      "all | grover | dj | bv | simon | glued");
      config.family = "all";
    }
    if (std::string(name) == "evolve") {
      cmd->add_option("--family", config.family,
                      "grover | dj | bv | simon | glued");
      cmd->add_option("--instance", config.instance_value,
                      "w* / a / mu_f instance value");
      cmd->add_option("--schedule", config.schedule, "linear | local");
      cmd->add_option("--total-time", config.total_time, "T");
      cmd->add_option("--dt", config.dt, "integrator step");
      cmd->add_option("--delta", config.delta, "local-schedule slack");
    }
  }

  try {
    app.parse(argc, argv);
    config.command = app.get_subcommands().front()->get_name();
    if (seed_given) config.seed = seed_value;
    return dispatch(config);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const macrosup::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const macrosup::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  }
}
