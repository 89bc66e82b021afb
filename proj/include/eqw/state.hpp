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

#include <complex>
#include <span>
#include <vector>

#include "eqw/coin.hpp"

namespace eqw {

// Inclusive rectangle of sites that may carry nonzero amplitude. The steppers
// grow it by one site per axis and step; it never shrinks.
struct SupportBox {
  long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

// Probability moments sum p, p x, p y, p x^2, p y^2, p x y.
struct RawMoments {
  double m0 = 0, mx = 0, my = 0, mxx = 0, myy = 0, mxy = 0;
};

// Walker on the window [x_min, x_max] of the 1D lattice. Coin slot 0 is
// s = +1 (moves right), slot 1 is s = -1.
class WalkState1D {
 public:
  WalkState1D(long x_min, long x_max);

  long x_min() const { return x_min_; }
  long x_max() const { return x_max_; }
  long sites() const { return x_max_ - x_min_ + 1; }
  long time() const { return time_; }
  const SupportBox& support() const { return support_; }

  cplx amplitude(long x, int slot) const;
  // Writes one amplitude and widens the support box to cover x.
  void set_amplitude(long x, int slot, cplx value);

  double norm_squared() const;

  std::span<const cplx> raw() const { return amplitudes_; }

 private:
  friend class Walk1D;

  long x_min_, x_max_;
  long time_ = 0;
  SupportBox support_;
  std::vector<cplx> amplitudes_;  // interleaved: (x, slot)
  std::vector<cplx> back_;        // step scratch; zero outside support_
};

// Walker on a rectangular window of the 2D lattice with a 2- or 4-state coin.
// Storage is row-major in x with y contiguous and the coin slots interleaved.
class WalkState2D {
 public:
  WalkState2D(long x_min, long x_max, long y_min, long y_max, int coin_dim,
              CoinOrdering ordering);

  long x_min() const { return x_min_; }
  long x_max() const { return x_max_; }
  long y_min() const { return y_min_; }
  long y_max() const { return y_max_; }
  long nx() const { return x_max_ - x_min_ + 1; }
  long ny() const { return y_max_ - y_min_ + 1; }
  int coin_dim() const { return coin_dim_; }
  CoinOrdering ordering() const { return ordering_; }
  long time() const { return time_; }
  const SupportBox& support() const { return support_; }

  cplx amplitude(long x, long y, int slot) const;
  void set_amplitude(long x, long y, int slot, cplx value);

  double norm_squared() const;

  std::span<const cplx> raw() const { return amplitudes_; }

  // Bit 2*(x&1) + (y&1) is set when sites of that parity class may hold
  // nonzero amplitudes; all other sites are exactly zero.
  unsigned parity_classes() const { return classes_; }
  static unsigned parity_bit(long x, long y) { return 1u << (2 * (x & 1) + (y & 1)); }

  // Moments accumulated by the last step, or nullptr when stale.
  const RawMoments* step_moments() const { return moments_valid_ ? &moments_ : nullptr; }

  std::size_t index(long x, long y) const {
    return (static_cast<std::size_t>(x - x_min_) * static_cast<std::size_t>(ny()) +
            static_cast<std::size_t>(y - y_min_)) * static_cast<std::size_t>(coin_dim_);
  }

 private:
  friend class Walk2D;

  long x_min_, x_max_, y_min_, y_max_;
  int coin_dim_;
  CoinOrdering ordering_;
  long time_ = 0;
  SupportBox support_;
  std::vector<cplx> amplitudes_;
  std::vector<cplx> back_;  // step scratch; zero outside support_
  unsigned classes_ = 0;
  unsigned back_classes_ = 0;
  RawMoments moments_;
  bool moments_valid_ = false;
};

// Sites of row x in [y0, y1] whose parity class is in mask, as first/stride.
// Returns false when the row has none.
inline bool row_sites(unsigned mask, long x, long y0, long y1, long& first, long& stride) {
  const unsigned m = (mask >> (2 * (x & 1))) & 3u;
  if (m == 0 || y1 < y0) return false;
  if (m == 3u) {
    first = y0;
    stride = 1;
    return true;
  }
  const long want = m == 1u ? 0 : 1;
  first = ((y0 & 1) == want) ? y0 : y0 + 1;
  stride = 2;
  return first <= y1;
}

inline constexpr double kCoinNormTolerance = 1e-12;

// Walker at x = 0 with the given coin amplitudes; window [-(capacity+1), capacity+1].
WalkState1D new_localized_1d(std::span<const cplx> coin_state, long capacity_steps);

// Walker at the origin; 2 amplitudes give an alternate-walk state, 4 give an
// XyCross-ordered state. Square window of half-width capacity_steps + 1.
WalkState2D new_localized_2d(std::span<const cplx> coin_state, long capacity_steps);

}  // namespace eqw
