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
#include <span>
#include <string>

#include "eqw/observe.hpp"
#include "eqw/spectrum.hpp"
#include "eqw/state.hpp"

namespace eqw {

// Shortest text that reads back to the same double (17 significant digits).
std::string format_double(double v);

void write_widths_csv(const std::filesystem::path& path, const WidthSeries& series);
// Sites with nonzero probability, "x,p" or "x,y,p".
void write_snapshot_csv(const std::filesystem::path& path, const WalkState1D& state);
void write_snapshot_csv(const std::filesystem::path& path, const WalkState2D& state);
// Nonzero amplitudes, "x,s,re,im" or "x,y,s,re,im".
void write_amplitudes_csv(const std::filesystem::path& path, const WalkState1D& state);
void write_amplitudes_csv(const std::filesystem::path& path, const WalkState2D& state);
void write_periods_json(const std::filesystem::path& path, std::span<const PeriodScore> periods);
// "kx,branch,omega" or "kx,ky,branch,omega".
void write_bands_csv(const std::filesystem::path& path, const BandGrid& grid);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace eqw
