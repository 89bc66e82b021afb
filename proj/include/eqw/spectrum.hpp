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

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "eqw/coin.hpp"
#include "eqw/evolve.hpp"

namespace eqw {

// Phases are reported as omega with eigenvalue exp(-i omega), folded into [0, 2pi).
double fold_phase(double omega);
// Shortest distance between two angles on the circle.
double circular_distance(double a, double b);
std::vector<double> eigenphases(const Eigen::MatrixXcd& u);

struct BranchPair {
  double plus = 0.0;   // principal arccos branch, in [0, pi]
  double minus = 0.0;  // -plus
};

// Closed forms below assume real rotation coins (alpha = beta = 0).
BranchPair dispersion_1d(double theta, double k);
BranchPair effective_dispersion_1d(double theta, int p, double k);

struct GroupVelocityMax {
  double v_max = 0.0;
  double k_at = 0.0;
};
GroupVelocityMax max_group_velocity_1d(double theta, int p);
// (1/p) d(omega_plus)/dk by central differences.
double effective_group_velocity_1d(double theta, int p, double k, double h = 1e-5);

BranchPair dispersion_alternate(double theta_x, double theta_y, double kx, double ky);

enum class Axis { X, Y };
std::string_view to_string(Axis axis);
Axis axis_from_string(std::string_view name);

// r = exp(i k_f) (c_x c_y exp(i k_o) - s_x s_y exp(-i k_o)), k_f along the field.
cplx stroboscopic_r(double theta_x, double theta_y, double kx, double ky, Axis field_axis);
// Spectrum of the p-step product for a field 2pi q/p along field_axis. A
// sample with |r| = 0 is taken from the product unitary itself.
BranchPair stroboscopic_dispersion_alternate(double theta_x, double theta_y, int p, double kx,
                                             double ky, Axis field_axis = Axis::X);

struct HadamardBranches {
  double omega1 = 0.0, omega2 = 0.0;  // in [0, pi]; sheets are +-omega1, +-omega2
};
double hadamard2_s(double kx, double ky);
HadamardBranches dispersion_hadamard2(double kx, double ky);

inline constexpr int kDftScanSamples = 4096;
inline constexpr double kDftBisectTolerance = 1e-12;
inline constexpr double kDftResidualTolerance = 1e-9;

double dft_residual(double omega, double kx, double ky);
// The four roots in [0, 2pi), ascending, repeated by multiplicity.
std::array<double, 4> dispersion_dft(double kx, double ky);

struct LemmaInput {
  Eigen::Matrix2cd a;
  int m = 1;
  cplx eta{1.0, 0.0};
};
// Validates m >= 1 and that eta is a primitive m-th root of unity.
LemmaInput make_lemma_input(const Eigen::Matrix2cd& a, int m, cplx eta);
cplx lemma_trace_closed(const LemmaInput& in);
cplx lemma_trace_direct(const LemmaInput& in);

// One-step unitary at momentum k, S(k) = diag(exp(i k.d_s)) times the coin.
// Alternate: S_y C_y S_x C_x.
Eigen::MatrixXcd momentum_unitary(const WalkSpec& spec, double kx, double ky = 0.0);
// U(k + phi e) U(k + 2 phi e) ... U(k + p phi e), phi = 2pi/p, e along field_axis.
Eigen::MatrixXcd stroboscopic_unitary(const WalkSpec& spec, int p, double kx, double ky,
                                      Axis field_axis = Axis::X);

struct BandSpec {
  WalkSpec walk;
  int p = 1;
  Axis field_axis = Axis::X;
  int resolution = 101;
};

struct BandGrid {
  int dims = 1;
  int branches = 2;
  std::vector<double> kx, ky;  // ky empty in 1D
  std::vector<double> omega;   // [ix][iy][branch], ascending per k
  bool closed_form = false;    // false: omega are the eigenphases themselves
  double max_oracle_residual = 0.0;

  double at(std::size_t ix, std::size_t iy, int branch) const;
};

bool has_closed_form(const BandSpec& spec);
// Closed-form sheets for one k, folded and sorted.
std::vector<double> closed_form_bands(const BandSpec& spec, double kx, double ky);
BandGrid sample_bands(const BandSpec& spec);

// Largest distance between two phase sets under the best pairing.
double match_phases(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace eqw
