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

#include <json.hpp>
#include <string>
#include <vector>

#include "macrosup/pipelines.hpp"

namespace macrosup {

/// 17 significant digits, lowercase scientific: lossless double round-trip.
std::string format_double(double v);

/// Fails with IoError when the output path cannot be opened for writing;
/// called before any computation starts.
void ensure_writable(const std::string& path);

/// Writes to the path, or to stdout when the path is empty.
void write_text(const std::string& path, const std::string& content);

nlohmann::ordered_json config_json(const RunConfig& config);

std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::ordered_json sweep_json(const RunConfig& config,
                                  const std::vector<SweepRow>& rows);

std::string scaling_csv(const std::vector<FamilyScaling>& results);
nlohmann::ordered_json scaling_json(const RunConfig& config,
                                    const std::vector<FamilyScaling>& results);

std::string table1_csv(const std::vector<Table1Row>& rows);
nlohmann::ordered_json table1_json(const RunConfig& config,
                                   const std::vector<Table1Row>& rows);

std::string trace_csv(const std::vector<TraceRow>& rows);
nlohmann::ordered_json trace_json(const RunConfig& config,
                                  const std::vector<TraceRow>& rows);

}  // namespace macrosup
