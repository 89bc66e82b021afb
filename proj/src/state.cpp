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

#include "eqw/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eqw/error.hpp"

namespace eqw {

namespace {

void check_normalized(std::span<const cplx> coin_state) {
  double n = 0.0;
  for (const auto& a : coin_state) n += std::norm(a);
  if (std::abs(n - 1.0) > kCoinNormTolerance)
    fail(ErrorCode::InvalidArgument,
         "initial coin state is not normalized (|c|^2 = " + std::to_string(n) + ")");
}

void check_capacity(long capacity_steps) {
  if (capacity_steps < 0) fail(ErrorCode::InvalidArgument, "capacity_steps must be >= 0");
}

}  // namespace

WalkState1D::WalkState1D(long x_min, long x_max)
    : x_min_(x_min), x_max_(x_max) {
  if (x_max < x_min) fail(ErrorCode::InvalidArgument, "empty 1D window");
  amplitudes_.assign(static_cast<std::size_t>(sites()) * 2, cplx{});
  support_ = {0, -1, 0, 0};  // empty
}

cplx WalkState1D::amplitude(long x, int slot) const {
  if (x < x_min_ || x > x_max_) return {};
  return amplitudes_[static_cast<std::size_t>(x - x_min_) * 2 + slot];
}

void WalkState1D::set_amplitude(long x, int slot, cplx value) {
  if (x < x_min_ || x > x_max_ || slot < 0 || slot > 1)
    fail(ErrorCode::InvalidArgument, "site outside the 1D window");
  amplitudes_[static_cast<std::size_t>(x - x_min_) * 2 + slot] = value;
  if (support_.x1 < support_.x0) {
    support_.x0 = support_.x1 = x;
  } else {
    support_.x0 = std::min(support_.x0, x);
    support_.x1 = std::max(support_.x1, x);
  }
}

double WalkState1D::norm_squared() const {
  double n = 0.0;
  for (long x = support_.x0; x <= support_.x1; ++x)
    for (int s = 0; s < 2; ++s) n += std::norm(amplitude(x, s));
  return n;
}

WalkState2D::WalkState2D(long x_min, long x_max, long y_min, long y_max, int coin_dim,
                         CoinOrdering ordering)
    : x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max),
      coin_dim_(coin_dim), ordering_(ordering) {
  if (x_max < x_min || y_max < y_min) fail(ErrorCode::InvalidArgument, "empty 2D window");
  if (coin_dim != 2 && coin_dim != 4) fail(ErrorCode::InvalidArgument, "coin_dim must be 2 or 4");
  if ((coin_dim == 2) != (ordering == CoinOrdering::Qubit))
    fail(ErrorCode::InvalidArgument, "coin ordering does not match coin_dim");
  amplitudes_.assign(static_cast<std::size_t>(nx()) * static_cast<std::size_t>(ny()) *
                         static_cast<std::size_t>(coin_dim),
                     cplx{});
  support_ = {0, -1, 0, -1};
}

cplx WalkState2D::amplitude(long x, long y, int slot) const {
  if (x < x_min_ || x > x_max_ || y < y_min_ || y > y_max_) return {};
  return amplitudes_[index(x, y) + static_cast<std::size_t>(slot)];
}

void WalkState2D::set_amplitude(long x, long y, int slot, cplx value) {
  if (x < x_min_ || x > x_max_ || y < y_min_ || y > y_max_ || slot < 0 || slot >= coin_dim_)
    fail(ErrorCode::InvalidArgument, "site outside the 2D window");
  amplitudes_[index(x, y) + static_cast<std::size_t>(slot)] = value;
  classes_ |= parity_bit(x, y);
  moments_valid_ = false;
  if (support_.x1 < support_.x0) {
    support_ = {x, x, y, y};
  } else {
    support_.x0 = std::min(support_.x0, x);
    support_.x1 = std::max(support_.x1, x);
    support_.y0 = std::min(support_.y0, y);
    support_.y1 = std::max(support_.y1, y);
  }
}

double WalkState2D::norm_squared() const {
  double n = 0.0;
  for (long x = support_.x0; x <= support_.x1; ++x) {
    long first = 0, stride = 1;
    if (!row_sites(classes_, x, support_.y0, support_.y1, first, stride)) continue;
    double row = 0.0;
    for (long y = first; y <= support_.y1; y += stride) {
      const cplx* a = amplitudes_.data() + index(x, y);
      for (int k = 0; k < coin_dim_; ++k) row += std::norm(a[k]);
    }
    n += row;
  }
  return n;
}

WalkState1D new_localized_1d(std::span<const cplx> coin_state, long capacity_steps) {
  if (coin_state.size() != 2) fail(ErrorCode::InvalidArgument, "1D coin state needs 2 amplitudes");
  check_normalized(coin_state);
  check_capacity(capacity_steps);
  WalkState1D state(-(capacity_steps + 1), capacity_steps + 1);
  for (int s = 0; s < 2; ++s) state.set_amplitude(0, s, coin_state[s]);
  return state;
}

WalkState2D new_localized_2d(std::span<const cplx> coin_state, long capacity_steps) {
  if (coin_state.size() != 2 && coin_state.size() != 4)
    fail(ErrorCode::InvalidArgument, "2D coin state needs 2 or 4 amplitudes");
  check_normalized(coin_state);
  check_capacity(capacity_steps);
  const long half = capacity_steps + 1;
  const int dim = static_cast<int>(coin_state.size());
  WalkState2D state(-half, half, -half, half, dim,
                    dim == 2 ? CoinOrdering::Qubit : CoinOrdering::XyCross);
  for (int s = 0; s < dim; ++s) state.set_amplitude(0, 0, s, coin_state[s]);
  return state;
}

}  // namespace eqw
