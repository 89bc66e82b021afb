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

#include "eqw/coin.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "eqw/error.hpp"

namespace eqw {

namespace {

// Slot labels in a shared direction alphabet: 0 = +x, 1 = -y, 2 = +y, 3 = -x.
// DiagAnti shares the XyCross slots (d+ ~ X+, a- ~ Y-, a+ ~ Y+, d- ~ X-).
std::array<int, 4> slot_labels(CoinOrdering ordering) {
  switch (ordering) {
    case CoinOrdering::XyCross:
    case CoinOrdering::DiagAnti:
      return {0, 1, 2, 3};
    case CoinOrdering::XxYy:
      return {0, 3, 2, 1};
    case CoinOrdering::Qubit:
      break;
  }
  fail(ErrorCode::InvalidArgument, "qubit ordering has no 4-state slots");
}

}  // namespace

std::string_view to_string(CoinOrdering ordering) {
  switch (ordering) {
    case CoinOrdering::Qubit: return "qubit";
    case CoinOrdering::XyCross: return "xy-cross";
    case CoinOrdering::DiagAnti: return "diag-anti";
    case CoinOrdering::XxYy: return "xx-yy";
  }
  return "?";
}

CoinOrdering ordering_from_string(std::string_view name) {
  if (name == "qubit") return CoinOrdering::Qubit;
  if (name == "xy-cross") return CoinOrdering::XyCross;
  if (name == "diag-anti") return CoinOrdering::DiagAnti;
  if (name == "xx-yy") return CoinOrdering::XxYy;
  fail(ErrorCode::InvalidArgument, "unknown coin ordering '" + std::string(name) + "'");
}

CoinOperator::CoinOperator(Eigen::MatrixXcd entries, CoinOrdering ordering)
    : entries_(std::move(entries)), ordering_(ordering) {
  if (entries_.rows() != entries_.cols() || (entries_.rows() != 2 && entries_.rows() != 4))
    fail(ErrorCode::InvalidArgument, "coin must be a 2x2 or 4x4 matrix");
  if ((entries_.rows() == 2) != (ordering_ == CoinOrdering::Qubit))
    fail(ErrorCode::InvalidArgument, "coin dimension does not match its ordering");
  if (unitarity_error() > kUnitarityTolerance)
    fail(ErrorCode::InvalidArgument, "coin is not unitary");
}

double CoinOperator::unitarity_error() const {
  const Eigen::MatrixXcd prod = entries_ * entries_.adjoint();
  const auto n = entries_.rows();
  return (prod - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

CoinOperator make_rotation_coin(double alpha, double beta, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::MatrixXcd m(2, 2);
  m(0, 0) = std::polar(1.0, alpha + beta) * c;
  m(0, 1) = std::polar(1.0, alpha - beta) * s;
  m(1, 0) = -std::polar(1.0, -(alpha - beta)) * s;
  m(1, 1) = std::polar(1.0, -(alpha + beta)) * c;
  return CoinOperator(std::move(m), CoinOrdering::Qubit);
}

CoinOperator grover_coin() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Constant(4, 4, 0.5);
  m.diagonal().array() -= 1.0;
  return CoinOperator(std::move(m), CoinOrdering::XyCross);
}

CoinOperator dft_coin() {
  // Entries i^(jk) / 2; powers of i are exact.
  static constexpr std::array<cplx, 4> kPowI = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  Eigen::MatrixXcd m(4, 4);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) m(j, k) = 0.5 * kPowI[(j * k) % 4];
  return CoinOperator(std::move(m), CoinOrdering::XyCross);
}

CoinOperator hadamard2_coin() {
  Eigen::MatrixXcd m(4, 4);
  m << 1, 1, 1, 1,
       1, -1, 1, -1,
       1, 1, -1, -1,
       1, -1, -1, 1;
  m *= 0.5;
  return CoinOperator(std::move(m), CoinOrdering::XyCross);
}

CoinOperator hadamard2_permuted_coin() {
  return reorder_coin(hadamard2_coin(), CoinOrdering::XxYy);
}

CoinOperator reorder_coin(const CoinOperator& coin, CoinOrdering target) {
  if (coin.dim() != 4)
    fail(ErrorCode::InvalidArgument, "coin orderings only apply to 4-state coins");
  const auto src = slot_labels(coin.ordering());
  const auto dst = slot_labels(target);
  std::array<int, 4> perm{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (src[j] == dst[i]) perm[i] = j;
  Eigen::MatrixXcd m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = coin(perm[i], perm[j]);
  return CoinOperator(std::move(m), target);
}

CoinOperator coin_by_name(std::string_view name, double alpha, double beta, double theta) {
  if (name == "rotation") return make_rotation_coin(alpha, beta, theta);
  if (name == "grover") return grover_coin();
  if (name == "dft") return dft_coin();
  if (name == "hadamard2") return hadamard2_coin();
  if (name == "hadamard2-permuted") return hadamard2_permuted_coin();
  fail(ErrorCode::InvalidArgument, "unknown coin '" + std::string(name) + "'");
}

}  // namespace eqw
