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
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace eqw {

using cplx = std::complex<double>;

// Coin-component conventions for 4-state coins.
//   XyCross  = col(X+, Y-, Y+, X-)   (canonical, used by every stepper)
//   DiagAnti = col(d+, a-, a+, d-)   (tensor-product ordering; same slots as
//                                     XyCross up to a 45 degree relabelling)
//   XxYy     = col(x+, x-, y+, y-)
enum class CoinOrdering { Qubit, XyCross, DiagAnti, XxYy };

std::string_view to_string(CoinOrdering ordering);
CoinOrdering ordering_from_string(std::string_view name);

inline constexpr double kUnitarityTolerance = 1e-12;

class CoinOperator {
 public:
  // Validates shape, ordering/dimension agreement and unitarity.
  CoinOperator(Eigen::MatrixXcd entries, CoinOrdering ordering);

  int dim() const { return static_cast<int>(entries_.rows()); }
  CoinOrdering ordering() const { return ordering_; }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  cplx operator()(int row, int col) const { return entries_(row, col); }

  // Largest entrywise deviation of C C^dagger from the identity.
  double unitarity_error() const;

 private:
  Eigen::MatrixXcd entries_;
  CoinOrdering ordering_;
};

// Three-angle SU(2) rotation; (0, 0, theta) is exp(i theta sigma_2).
CoinOperator make_rotation_coin(double alpha, double beta, double theta);

CoinOperator grover_coin();
CoinOperator dft_coin();
CoinOperator hadamard2_coin();
// hadamard2_coin() expressed in the XxYy ordering.
CoinOperator hadamard2_permuted_coin();

// P C P^dagger with P mapping coin.ordering() onto target. 4-state coins only.
CoinOperator reorder_coin(const CoinOperator& coin, CoinOrdering target);

// Named lookup used by configs: rotation, grover, dft, hadamard2,
// hadamard2-permuted. Angles are ignored by the fixed coins.
CoinOperator coin_by_name(std::string_view name, double alpha = 0.0,
                          double beta = 0.0, double theta = 0.0);

}  // namespace eqw
