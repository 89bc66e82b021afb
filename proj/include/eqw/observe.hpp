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

#include <span>
#include <vector>

#include "eqw/evolve.hpp"
#include "eqw/state.hpp"

namespace eqw {

struct Marginal1D {
  long x_min = 0;
  std::vector<double> p;

  double at(long x) const;
  double total() const;
};

// Dense probability grid over [x_min, x_max] x [y_min, y_max], y contiguous.
struct Distribution2D {
  long x_min = 0, x_max = -1, y_min = 0, y_max = -1;
  std::vector<double> p;

  Distribution2D() = default;
  Distribution2D(long x0, long x1, long y0, long y1);

  long nx() const { return x_max - x_min + 1; }
  long ny() const { return y_max - y_min + 1; }
  double at(long x, long y) const;
  double& ref(long x, long y);
  double total() const;
};

Marginal1D position_marginal(const WalkState1D& state);
Distribution2D position_marginal(const WalkState2D& state);

// Standard deviations along x, y and the orthonormal diagonals
// u = (x + y)/sqrt2, v = (x - y)/sqrt2. 1D states fill sigma_x only.
struct Widths {
  double sigma_x = 0.0, sigma_y = 0.0, sigma_d = 0.0, sigma_a = 0.0;
};

Widths widths(const WalkState1D& state);
Widths widths(const WalkState2D& state);
Widths widths(const Distribution2D& dist);

struct WidthSeries {
  std::vector<long> t;
  std::vector<double> sigma_x, sigma_y, sigma_d, sigma_a;

  void push(long time, const Widths& w);
  std::size_t size() const { return t.size(); }
};

class WidthRecorder : public Observer {
 public:
  void observe(const WalkState1D& state) override { series_.push(state.time(), widths(state)); }
  void observe(const WalkState2D& state) override { series_.push(state.time(), widths(state)); }

  const WidthSeries& series() const { return series_; }

 private:
  WidthSeries series_;
};

// Moves the mass at (x, y) to (x + y, x - y). Every occupied site must share
// the parity of x + y; the result is then supported on one sublattice of the
// rotated grid.
Distribution2D rotate_frame_45(const Distribution2D& dist);

struct PeriodScore {
  long period = 0;
  double score = 0.0;
};

inline constexpr double kPeriodPeakThreshold = 0.5;

// Candidate periods of a series: local maxima (>= threshold) of the lagged
// Pearson autocorrelation of the linearly detrended series, best first.
// Requires series.size() >= 3 * max_period.
std::vector<PeriodScore> detect_periods(std::span<const double> series, long max_period);

}  // namespace eqw
