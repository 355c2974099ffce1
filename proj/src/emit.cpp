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

#include "macrosup/emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace macrosup {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void ensure_writable(const std::string& path) {
  if (path.empty()) return;
  std::ofstream probe(path, std::ios::app);
  if (!probe) {
    throw IoError("cannot open output path for writing: " + path);
  }
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw IoError("cannot open output path for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["n_min"] = c.n_min;
  j["n_max"] = c.n_max;
  j["s_points"] = c.s_points;
  j["instances"] = c.instances;
  if (c.seed) {
    j["seed"] = *c.seed;
  } else {
    j["seed"] = nullptr;
  }
  j["alpha"] = c.alpha;
  j["format"] = c.format;
  j["out"] = c.out;
  j["workers"] = c.workers;
  return j;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "family,n,instance,s,e_max,max_variance,gap,seed\n";
  for (const auto& r : rows) {
    out += r.family;
    out += ',' + std::to_string(r.n);
    out += ',' + r.instance;
    out += ',' + format_double(r.s);
    out += ',' + format_double(r.e_max);
    out += ',' + format_double(r.max_variance);
    out += ',' + format_double(r.gap);
    out += ',' + std::to_string(r.seed);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json sweep_json(const RunConfig& config,
                                  const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json j;
  j["config"] = config_json(config);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["family"] = r.family;
    row["n"] = r.n;
    row["instance"] = r.instance;
    row["s"] = r.s;
    row["e_max"] = r.e_max;
    row["max_variance"] = r.max_variance;
    row["gap"] = r.gap;
    row["seed"] = r.seed;
    j["rows"].push_back(std::move(row));
  }
  j["fits"] = nlohmann::ordered_json::object();
  return j;
}

std::string scaling_csv(const std::vector<FamilyScaling>& results) {
  std::string out = "family,n,instance,value,seed\n";
  for (const auto& fs : results) {
    for (const auto& row : fs.values) {
      out += fs.family;
      out += ',' + std::to_string(row.n);
      out += ',' + row.label;
      out += ',' + format_double(row.value);
      out += ",0\n";
    }
  }
  return out;
}

namespace {

nlohmann::ordered_json family_fit_json(const FamilyScaling& fs) {
  nlohmann::ordered_json f;
  f["p_e"] = fs.p_e;
  f["stderr"] = fs.stderr_value;
  f["verdict"] = fs.error.empty() ? to_string(fs.verdict) : "error";
  if (!fs.error.empty()) f["error"] = fs.error;
  f["medians"] = nlohmann::ordered_json::array();
  for (const auto& m : fs.medians) {
    f["medians"].push_back({{"n", m.n}, {"value", m.value}});
  }
  f["exceptional_fraction"] = nlohmann::ordered_json::array();
  for (const auto& [n, frac] : fs.exceptional_fraction) {
    f["exceptional_fraction"].push_back({{"n", n}, {"fraction", frac}});
  }
  return f;
}

}  // namespace

nlohmann::ordered_json scaling_json(const RunConfig& config,
                                    const std::vector<FamilyScaling>& results) {
  nlohmann::ordered_json j;
  j["config"] = config_json(config);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& fs : results) {
    for (const auto& row : fs.values) {
      j["rows"].push_back({{"family", fs.family},
                           {"n", row.n},
                           {"instance", row.label},
                           {"value", row.value}});
    }
  }
  j["fits"] = nlohmann::ordered_json::object();
  for (const auto& fs : results) j["fits"][fs.family] = family_fit_json(fs);
  return j;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::string out = "family,speedup_note,p_e,stderr,verdict,error\n";
  for (const auto& r : rows) {
    out += r.family;
    out += ',' + r.speedup_note;
    out += ',' + format_double(r.p_e);
    out += ',' + format_double(r.stderr_value);
    out += ',' + r.verdict;
    out += ',' + r.error;
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json table1_json(const RunConfig& config,
                                   const std::vector<Table1Row>& rows) {
  nlohmann::ordered_json j;
  j["config"] = config_json(config);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"family", r.family},
                         {"speedup_note", r.speedup_note},
                         {"p_e", r.p_e},
                         {"stderr", r.stderr_value},
                         {"verdict", r.verdict},
                         {"error", r.error}});
  }
  j["fits"] = nlohmann::ordered_json::object();
  return j;
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
  std::string out = "t,s,ground_overlap,first_excited_overlap,energy\n";
  for (const auto& r : rows) {
    out += format_double(r.t);
    out += ',' + format_double(r.s);
    out += ',' + format_double(r.ground_overlap);
    out += ',' + format_double(r.first_excited_overlap);
    out += ',' + format_double(r.energy);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json trace_json(const RunConfig& config,
                                  const std::vector<TraceRow>& rows) {
  nlohmann::ordered_json j;
  j["config"] = config_json(config);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"t", r.t},
                         {"s", r.s},
                         {"ground_overlap", r.ground_overlap},
                         {"first_excited_overlap", r.first_excited_overlap},
                         {"energy", r.energy}});
  }
  j["fits"] = nlohmann::ordered_json::object();
  return j;
}

}  // namespace macrosup
