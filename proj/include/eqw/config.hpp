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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "eqw/evolve.hpp"
#include "eqw/spectrum.hpp"

namespace eqw {

enum class Command { Run, Spectrum };

struct PeriodsOptions {
  std::string series = "sigma_x";
  long max_period = 0;  // 0: min(64, (steps + 1) / 3)
};

struct SpectrumOptions {
  int resolution = 101;
  int p = 1;
  Axis field_axis = Axis::X;
  bool oracle = true;
};

struct RunConfig {
  Command command = Command::Run;
  std::string preset;  // informational
  WalkSpec walk;
  std::string initial_name;  // empty when given explicitly
  bool has_delta_theta = false;
  double delta_theta = 0.0;
  bool widths = true, snapshot = true, periods = false, amplitudes = false;
  std::vector<long> snapshot_times;  // empty: final step only
  PeriodsOptions period_opts;
  std::string output;
  SpectrumOptions spectrum;
  std::vector<std::string> notes;  // e.g. decimal phases resolved to fractions
};

inline constexpr double kDecimalPhaseTolerance = 1e-12;
inline constexpr std::int64_t kMaxRationalDenominator = 1000000;

// Field text: "2pi*q/p", "2pi/p", "0", or a decimal in radians.
FieldPhase parse_field(std::string_view text, std::string* note = nullptr);

std::vector<cplx> named_initial_state(std::string_view name);
std::vector<std::string> initial_state_names();

// Raw document access; errors carry the source name and line.
YAML::Node load_config_file(const std::string& path);
YAML::Node load_config_text(const std::string& text, const std::string& source = "<string>");
YAML::Node preset_node(std::string_view name);

struct PresetInfo {
  std::string name;
  std::string description;
};
std::vector<PresetInfo> list_presets();

// "a.b=value"; value parsed as YAML.
void apply_override(YAML::Node& doc, std::string_view assignment);

// forced, when given, replaces the document's command.
RunConfig parse_config(const YAML::Node& doc, const std::string& source = "<config>",
                       const Command* forced = nullptr);

// Canonical YAML of a resolved config; parses back to the same config.
std::string emit_config(const RunConfig& cfg);

struct SweepEntry {
  std::string name;
  YAML::Node doc;
};
bool has_sweep(const YAML::Node& doc);
// Cartesian axes (field_x, field_y, theta, delta_theta, p) or named cases.
std::vector<SweepEntry> expand_sweep(const YAML::Node& doc, const std::string& source = "<config>");

}  // namespace eqw
