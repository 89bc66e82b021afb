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

#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eqw/coin.hpp"
#include "eqw/field.hpp"
#include "eqw/state.hpp"

namespace eqw {

// One step of the 1D electric walk: coin, conditional shift, then the
// position phase exp(i*phi*x).
class Walk1D {
 public:
  Walk1D(CoinOperator coin, FieldPhase phi);

  // Throws BoundaryError when the support would leave the window.
  void step(WalkState1D& state);

  const CoinOperator& coin() const { return coin_; }
  const FieldPhase& phi() const { return phi_; }

 private:
  CoinOperator coin_;
  FieldPhase phi_;
  long cached_first_ = 0;
  std::vector<cplx> phase_;
};

// One step of a 2D electric walk. Two layouts share the class:
//  - 4-state coin (Grover, DFT, Hadamard, ...) in XyCross ordering: coin, then
//    X+/X- move along x and Y+/Y- along y, then exp(i(phi_x x + phi_y y)).
//  - alternate walk with a qubit coin: C_x, shift along x, C_y, shift along y,
//    then the same phase.
class Walk2D {
 public:
  static Walk2D four_state(CoinOperator coin, FieldPhase phi_x, FieldPhase phi_y);
  static Walk2D alternate(CoinOperator coin_x, CoinOperator coin_y, FieldPhase phi_x,
                          FieldPhase phi_y);

  void step(WalkState2D& state);

  bool is_alternate() const { return alternate_; }

 private:
  Walk2D(bool alternate, CoinOperator first, CoinOperator second, FieldPhase phi_x,
         FieldPhase phi_y);

  void prepare_phases(const WalkState2D& state);
  void check_room(const WalkState2D& state) const;
  void step_four_state(WalkState2D& state);
  void step_alternate(WalkState2D& state);

  bool alternate_;
  CoinOperator coin_a_;  // 4-state coin, or C_x
  CoinOperator coin_b_;  // unused copy of coin_a_, or C_y
  FieldPhase phi_x_, phi_y_;
  long cached_x_ = 0, cached_y_ = 0;
  std::vector<cplx> phase_x_, phase_y_;
};

// Free-function forms; they build a stepper per call.
void step_1d(WalkState1D& state, const CoinOperator& coin, const FieldPhase& phi);
void step_grover_like_2d(WalkState2D& state, const CoinOperator& coin, const FieldPhase& phi_x,
                         const FieldPhase& phi_y);
void step_alternate_2d(WalkState2D& state, const CoinOperator& coin_x,
                       const CoinOperator& coin_y, const FieldPhase& phi_x,
                       const FieldPhase& phi_y);

enum class WalkFamily { OneD, Grover, Alternate, Dft, Hadamard, Coin4 };

std::string_view to_string(WalkFamily family);
WalkFamily family_from_string(std::string_view name);

struct WalkSpec {
  WalkFamily family = WalkFamily::OneD;
  double alpha = 0.0;
  double beta = 0.0;
  double theta = std::numbers::pi / 4;    // 1D coin
  double theta_x = std::numbers::pi / 4;  // alternate walk
  double theta_y = std::numbers::pi / 4;
  std::string coin4 = "grover";  // Coin4 family: any named 4-state coin
  FieldPhase field_x;
  FieldPhase field_y;  // ignored in 1D
  long steps = 0;
  std::vector<cplx> initial;

  // Checks coin-state length against the family; throws Error(InvalidArgument).
  void validate() const;
};

using WalkState = std::variant<WalkState1D, WalkState2D>;

class Observer {
 public:
  virtual ~Observer() = default;
  virtual void observe(const WalkState1D&) {}
  virtual void observe(const WalkState2D&) {}
};

struct RunResult {
  WalkState state;
};

// Runs spec.steps steps from the localized initial state. Every observer sees
// the initial state and the state after each step.
RunResult run(const WalkSpec& spec, std::span<Observer* const> observers = {});

// The stepper a spec describes, with the coin already in XyCross ordering.
Walk2D make_walk_2d(const WalkSpec& spec);
Walk1D make_walk_1d(const WalkSpec& spec);

}  // namespace eqw
