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

#include "eqw/evolve.hpp"

#include <array>
#include <string>

#include "eqw/error.hpp"

namespace eqw {

namespace {

// Sized-4 dot product written out; std::complex multiplication is compiled
// with limited-range semantics for the core library.
inline cplx dot2(const cplx* row, const cplx* v) { return row[0] * v[0] + row[1] * v[1]; }
inline cplx dot4(const cplx* row, const cplx* v) {
  return row[0] * v[0] + row[1] * v[1] + row[2] * v[2] + row[3] * v[3];
}

std::string window_text(long x0, long x1) {
  return "[" + std::to_string(x0) + ", " + std::to_string(x1) + "]";
}

template <int N>
std::array<cplx, N * N> row_major(const CoinOperator& coin) {
  std::array<cplx, N * N> out{};
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) out[r * N + c] = coin(r, c);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// 1D

Walk1D::Walk1D(CoinOperator coin, FieldPhase phi) : coin_(std::move(coin)), phi_(phi) {
  if (coin_.dim() != 2) fail(ErrorCode::InvalidArgument, "1D walk needs a 2x2 coin");
}

void Walk1D::step(WalkState1D& st) {
  SupportBox& box = st.support_;
  const long t_next = st.time_ + 1;
  if (box.x1 < box.x0) {  // zero state
    st.time_ = t_next;
    return;
  }
  if (box.x0 - 1 < st.x_min_ || box.x1 + 1 > st.x_max_)
    throw BoundaryError(t_next, "walker reaches the edge of window " +
                                    window_text(st.x_min_, st.x_max_) + " at step " +
                                    std::to_string(t_next));
  if (phase_.size() != static_cast<std::size_t>(st.sites()) || cached_first_ != st.x_min_) {
    phase_ = phase_factors(phi_, st.x_min_, st.sites());
    cached_first_ = st.x_min_;
  }
  if (st.back_.size() != st.amplitudes_.size()) st.back_.assign(st.amplitudes_.size(), cplx{});

  const auto c = row_major<2>(coin_);
  const cplx* in = st.amplitudes_.data();
  cplx* out = st.back_.data();
  for (long x = box.x0 - 1; x <= box.x1 + 1; ++x) {
    const std::size_t i = static_cast<std::size_t>(x - st.x_min_);
    cplx up{}, down{};
    if (x - 1 >= box.x0 && x - 1 <= box.x1) up = dot2(&c[0], in + 2 * (i - 1));
    if (x + 1 >= box.x0 && x + 1 <= box.x1) down = dot2(&c[2], in + 2 * (i + 1));
    out[2 * i] = up * phase_[i];
    out[2 * i + 1] = down * phase_[i];
  }
  st.amplitudes_.swap(st.back_);
  box.x0 -= 1;
  box.x1 += 1;
  st.time_ = t_next;
}

void step_1d(WalkState1D& state, const CoinOperator& coin, const FieldPhase& phi) {
  Walk1D walk(coin, phi);
  walk.step(state);
}

// ---------------------------------------------------------------------------
// 2D

Walk2D::Walk2D(bool alternate, CoinOperator first, CoinOperator second, FieldPhase phi_x,
               FieldPhase phi_y)
    : alternate_(alternate), coin_a_(std::move(first)), coin_b_(std::move(second)),
      phi_x_(phi_x), phi_y_(phi_y) {}

Walk2D Walk2D::four_state(CoinOperator coin, FieldPhase phi_x, FieldPhase phi_y) {
  if (coin.dim() != 4) fail(ErrorCode::InvalidArgument, "four-state walk needs a 4x4 coin");
  if (coin.ordering() != CoinOrdering::XyCross)
    fail(ErrorCode::InvalidArgument, "four-state walk expects an xy-cross ordered coin, got " +
                                         std::string(to_string(coin.ordering())));
  CoinOperator copy = coin;
  return Walk2D(false, std::move(coin), std::move(copy), phi_x, phi_y);
}

Walk2D Walk2D::alternate(CoinOperator coin_x, CoinOperator coin_y, FieldPhase phi_x,
                         FieldPhase phi_y) {
  if (coin_x.dim() != 2 || coin_y.dim() != 2)
    fail(ErrorCode::InvalidArgument, "alternate walk needs two 2x2 coins");
  return Walk2D(true, std::move(coin_x), std::move(coin_y), phi_x, phi_y);
}

void Walk2D::prepare_phases(const WalkState2D& st) {
  if (phase_x_.size() != static_cast<std::size_t>(st.nx()) || cached_x_ != st.x_min_) {
    phase_x_ = phase_factors(phi_x_, st.x_min_, st.nx());
    cached_x_ = st.x_min_;
  }
  if (phase_y_.size() != static_cast<std::size_t>(st.ny()) || cached_y_ != st.y_min_) {
    phase_y_ = phase_factors(phi_y_, st.y_min_, st.ny());
    cached_y_ = st.y_min_;
  }
}

void Walk2D::check_room(const WalkState2D& st) const {
  const SupportBox& b = st.support_;
  if (b.x0 - 1 < st.x_min_ || b.x1 + 1 > st.x_max_ || b.y0 - 1 < st.y_min_ ||
      b.y1 + 1 > st.y_max_) {
    const long t_next = st.time_ + 1;
    throw BoundaryError(t_next, "walker reaches the edge of window " +
                                    window_text(st.x_min_, st.x_max_) + " x " +
                                    window_text(st.y_min_, st.y_max_) + " at step " +
                                    std::to_string(t_next));
  }
}

void Walk2D::step(WalkState2D& st) {
  if (alternate_) {
    if (st.coin_dim() != 2) fail(ErrorCode::InvalidArgument, "alternate walk needs a 2-state walker");
  } else {
    if (st.coin_dim() != 4) fail(ErrorCode::InvalidArgument, "four-state walk needs a 4-state walker");
    if (st.ordering() != CoinOrdering::XyCross)
      fail(ErrorCode::InvalidArgument, "walker state is not in xy-cross ordering");
  }
  if (st.support_.x1 < st.support_.x0) {
    st.time_ += 1;
    return;
  }
  check_room(st);
  prepare_phases(st);
  if (st.back_.size() != st.amplitudes_.size()) {
    st.back_.assign(st.amplitudes_.size(), cplx{});
    st.back_classes_ = 0;
  }
  if (alternate_)
    step_alternate(st);
  else
    step_four_state(st);
  SupportBox& b = st.support_;
  b.x0 -= 1;
  b.x1 += 1;
  b.y0 -= 1;
  b.y1 += 1;
  st.time_ += 1;
}

namespace {

unsigned flip_x(unsigned m) { return ((m & 3u) << 2) | ((m >> 2) & 3u); }
unsigned flip_y(unsigned m) { return ((m & 5u) << 1) | ((m >> 1) & 5u); }

// Folds one row's sums (p, p y, p y^2) at abscissa x into m.
void add_row(RawMoments& m, long x, double r0, double ry, double ryy) {
  const double xd = static_cast<double>(x);
  m.m0 += r0;
  m.mx += r0 * xd;
  m.mxx += r0 * xd * xd;
  m.my += ry;
  m.myy += ryy;
  m.mxy += ry * xd;
}

}  // namespace

// Slots: 0 = X+ (from x-1), 1 = Y- (from y+1), 2 = Y+ (from y-1), 3 = X- (from x+1).
// Only parity classes that can be nonzero afterwards, or that still hold old
// data in the scratch buffer, are written.
void Walk2D::step_four_state(WalkState2D& st) {
  const SupportBox b = st.support_;
  const auto c = row_major<4>(coin_a_);
  const cplx* in = st.amplitudes_.data();
  cplx* out = st.back_.data();
  const unsigned next = flip_x(st.classes_) | flip_y(st.classes_);
  const unsigned write = next | st.back_classes_;
  RawMoments m;

  for (long x = b.x0 - 1; x <= b.x1 + 1; ++x) {
    long first = 0, stride = 1;
    if (!row_sites(write, x, b.y0 - 1, b.y1 + 1, first, stride)) continue;
    const cplx* left = (x - 1 >= b.x0 && x - 1 <= b.x1) ? in + st.index(x - 1, st.y_min_) : nullptr;
    const cplx* mid = (x >= b.x0 && x <= b.x1) ? in + st.index(x, st.y_min_) : nullptr;
    const cplx* right = (x + 1 >= b.x0 && x + 1 <= b.x1) ? in + st.index(x + 1, st.y_min_) : nullptr;
    cplx* row = out + st.index(x, st.y_min_);
    const cplx px = phase_x_[static_cast<std::size_t>(x - st.x_min_)];
    double r0 = 0, ry = 0, ryy = 0;
    for (long y = first; y <= b.y1 + 1; y += stride) {
      const long iy = y - st.y_min_;
      const bool y_in = y >= b.y0 && y <= b.y1;
      cplx xp{}, ym{}, yp{}, xm{};
      if (left && y_in) xp = dot4(&c[0], left + 4 * iy);
      if (mid && y + 1 <= b.y1) ym = dot4(&c[4], mid + 4 * (iy + 1));
      if (mid && y - 1 >= b.y0) yp = dot4(&c[8], mid + 4 * (iy - 1));
      if (right && y_in) xm = dot4(&c[12], right + 4 * iy);
      const cplx ph = px * phase_y_[static_cast<std::size_t>(iy)];
      cplx* o = row + 4 * iy;
      o[0] = xp * ph;
      o[1] = ym * ph;
      o[2] = yp * ph;
      o[3] = xm * ph;
      const double p = std::norm(o[0]) + std::norm(o[1]) + std::norm(o[2]) + std::norm(o[3]);
      const double yd = static_cast<double>(y);
      r0 += p;
      ry += p * yd;
      ryy += p * yd * yd;
    }
    add_row(m, x, r0, ry, ryy);
  }
  st.amplitudes_.swap(st.back_);
  st.back_classes_ = st.classes_;
  st.classes_ = next;
  st.moments_ = m;
  st.moments_valid_ = true;
}

// Half step along x into the scratch buffer, then along y back into the state.
void Walk2D::step_alternate(WalkState2D& st) {
  const SupportBox b = st.support_;
  const auto cx = row_major<2>(coin_a_);
  const auto cy = row_major<2>(coin_b_);
  const cplx* in = st.amplitudes_.data();
  cplx* half = st.back_.data();
  const unsigned mid_classes = flip_x(st.classes_);
  const unsigned write_half = mid_classes | st.back_classes_;

  for (long x = b.x0 - 1; x <= b.x1 + 1; ++x) {
    long first = 0, stride = 1;
    if (!row_sites(write_half, x, b.y0, b.y1, first, stride)) continue;
    const cplx* left = (x - 1 >= b.x0 && x - 1 <= b.x1) ? in + st.index(x - 1, st.y_min_) : nullptr;
    const cplx* right = (x + 1 >= b.x0 && x + 1 <= b.x1) ? in + st.index(x + 1, st.y_min_) : nullptr;
    cplx* row = half + st.index(x, st.y_min_);
    for (long y = first; y <= b.y1; y += stride) {
      const long iy = y - st.y_min_;
      row[2 * iy] = left ? dot2(&cx[0], left + 2 * iy) : cplx{};
      row[2 * iy + 1] = right ? dot2(&cx[2], right + 2 * iy) : cplx{};
    }
  }

  const unsigned next = flip_y(mid_classes);
  const unsigned write = next | st.classes_;
  cplx* out = st.amplitudes_.data();
  RawMoments m;
  for (long x = b.x0 - 1; x <= b.x1 + 1; ++x) {
    long first = 0, stride = 1;
    if (!row_sites(write, x, b.y0 - 1, b.y1 + 1, first, stride)) continue;
    const cplx* src = half + st.index(x, st.y_min_);
    cplx* row = out + st.index(x, st.y_min_);
    const cplx px = phase_x_[static_cast<std::size_t>(x - st.x_min_)];
    double r0 = 0, ry = 0, ryy = 0;
    for (long y = first; y <= b.y1 + 1; y += stride) {
      const long iy = y - st.y_min_;
      const cplx up = (y - 1 >= b.y0) ? dot2(&cy[0], src + 2 * (iy - 1)) : cplx{};
      const cplx down = (y + 1 <= b.y1) ? dot2(&cy[2], src + 2 * (iy + 1)) : cplx{};
      const cplx ph = px * phase_y_[static_cast<std::size_t>(iy)];
      row[2 * iy] = up * ph;
      row[2 * iy + 1] = down * ph;
      const double p = std::norm(row[2 * iy]) + std::norm(row[2 * iy + 1]);
      const double yd = static_cast<double>(y);
      r0 += p;
      ry += p * yd;
      ryy += p * yd * yd;
    }
    add_row(m, x, r0, ry, ryy);
  }
  st.back_classes_ = mid_classes;
  st.classes_ = next;
  st.moments_ = m;
  st.moments_valid_ = true;
}

void step_grover_like_2d(WalkState2D& state, const CoinOperator& coin, const FieldPhase& phi_x,
                         const FieldPhase& phi_y) {
  Walk2D::four_state(coin, phi_x, phi_y).step(state);
}

void step_alternate_2d(WalkState2D& state, const CoinOperator& coin_x, const CoinOperator& coin_y,
                       const FieldPhase& phi_x, const FieldPhase& phi_y) {
  Walk2D::alternate(coin_x, coin_y, phi_x, phi_y).step(state);
}

// ---------------------------------------------------------------------------
// Specs and runs

std::string_view to_string(WalkFamily family) {
  switch (family) {
    case WalkFamily::OneD: return "1d";
    case WalkFamily::Grover: return "grover";
    case WalkFamily::Alternate: return "alternate";
    case WalkFamily::Dft: return "dft";
    case WalkFamily::Hadamard: return "hadamard2";
    case WalkFamily::Coin4: return "coin4";
  }
  return "?";
}

WalkFamily family_from_string(std::string_view name) {
  if (name == "1d" || name == "oned") return WalkFamily::OneD;
  if (name == "grover") return WalkFamily::Grover;
  if (name == "alternate") return WalkFamily::Alternate;
  if (name == "dft") return WalkFamily::Dft;
  if (name == "hadamard2" || name == "hadamard") return WalkFamily::Hadamard;
  if (name == "coin4") return WalkFamily::Coin4;
  fail(ErrorCode::InvalidArgument, "unknown walk family '" + std::string(name) + "'");
}

void WalkSpec::validate() const {
  if (steps < 0) fail(ErrorCode::InvalidArgument, "steps must be >= 0");
  const std::size_t want =
      (family == WalkFamily::OneD || family == WalkFamily::Alternate) ? 2u : 4u;
  if (initial.size() != want)
    fail(ErrorCode::InvalidArgument, std::string(to_string(family)) + " walk needs " +
                                         std::to_string(want) + " initial coin amplitudes, got " +
                                         std::to_string(initial.size()));
  if (family == WalkFamily::Coin4) {
    const CoinOperator c = coin_by_name(coin4, alpha, beta, theta);
    if (c.dim() != 4) fail(ErrorCode::InvalidArgument, "coin4 walk needs a 4-state coin");
  }
}

Walk1D make_walk_1d(const WalkSpec& spec) {
  return Walk1D(make_rotation_coin(spec.alpha, spec.beta, spec.theta), spec.field_x);
}

Walk2D make_walk_2d(const WalkSpec& spec) {
  switch (spec.family) {
    case WalkFamily::Grover:
      return Walk2D::four_state(grover_coin(), spec.field_x, spec.field_y);
    case WalkFamily::Dft:
      return Walk2D::four_state(dft_coin(), spec.field_x, spec.field_y);
    case WalkFamily::Hadamard:
      return Walk2D::four_state(hadamard2_coin(), spec.field_x, spec.field_y);
    case WalkFamily::Coin4:
      return Walk2D::four_state(
          reorder_coin(coin_by_name(spec.coin4, spec.alpha, spec.beta, spec.theta),
                       CoinOrdering::XyCross),
          spec.field_x, spec.field_y);
    case WalkFamily::Alternate:
      return Walk2D::alternate(make_rotation_coin(spec.alpha, spec.beta, spec.theta_x),
                               make_rotation_coin(spec.alpha, spec.beta, spec.theta_y),
                               spec.field_x, spec.field_y);
    case WalkFamily::OneD:
      break;
  }
  fail(ErrorCode::InvalidArgument, "1D spec has no 2D stepper");
}

RunResult run(const WalkSpec& spec, std::span<Observer* const> observers) {
  spec.validate();
  if (spec.family == WalkFamily::OneD) {
    WalkState1D st = new_localized_1d(spec.initial, spec.steps);
    Walk1D walk = make_walk_1d(spec);
    for (Observer* o : observers) o->observe(st);
    for (long t = 0; t < spec.steps; ++t) {
      walk.step(st);
      for (Observer* o : observers) o->observe(st);
    }
    return {WalkState(std::move(st))};
  }
  WalkState2D st = new_localized_2d(spec.initial, spec.steps);
  Walk2D walk = make_walk_2d(spec);
  for (Observer* o : observers) o->observe(st);
  for (long t = 0; t < spec.steps; ++t) {
    walk.step(st);
    for (Observer* o : observers) o->observe(st);
  }
  return {WalkState(std::move(st))};
}

}  // namespace eqw
