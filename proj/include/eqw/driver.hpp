// Copyright 2026 The eqwalk Authors
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

#include <filesystem>
#include <string>
#include <vector>

#include "eqw/config.hpp"

namespace eqw {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kOutputDirEnv = "EQWALK_OUTPUT_DIR";
inline constexpr double kOracleTolerance = 1e-9;

// $EQWALK_OUTPUT_DIR, else "eqwalk-out".
std::filesystem::path default_output_dir();

// Writes widths.csv, snapshot_t<T>.csv, optional amplitudes/periods, and
// manifest.yaml into out.
void run_command(const RunConfig& cfg, const std::filesystem::path& out);
// Writes bands.csv, optional oracle.json, and manifest.yaml into out.
void spectrum_command(const RunConfig& cfg, const std::filesystem::path& out);

struct SweepOutcome {
  std::string name;
  int code = 0;  // 0 or an ErrorCode value
  std::string message;
};

// Each entry runs its own command into out/<name>. Entries run on a pool of
// the given size; failures are collected, not thrown.
std::vector<SweepOutcome> sweep_command(const YAML::Node& doc, const std::string& source,
                                        const std::filesystem::path& out, int workers);

}  // namespace eqw
