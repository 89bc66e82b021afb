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

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "eqw/coin.hpp"
#include "eqw/error.hpp"
#include "oracles.hpp"

using namespace eqw;

namespace {

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("rotation coin at pi/4 is the Hadamard-like coin") {
  const CoinOperator c = make_rotation_coin(0, 0, oracle::kPi / 4);
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd want;
  want << r, r, -r, r;
  CHECK(max_abs_diff(c.matrix(), want) < 1e-15);
  CHECK(c.ordering() == CoinOrdering::Qubit);
}

TEST_CASE("rotation coin at zero is the identity") {
  CHECK(max_abs_diff(make_rotation_coin(0, 0, 0).matrix(), Eigen::Matrix2cd::Identity()) == 0.0);
}

TEST_CASE("rotation coin is unitary for arbitrary angles") {
  const CoinOperator c = make_rotation_coin(0.3, 0.7, 1.1);
  CHECK(max_abs_diff(c.matrix() * c.matrix().adjoint(), Eigen::Matrix2cd::Identity()) < 1e-14);
  for (double th : {-2.0, -0.4, 0.0, 0.9, 3.0})
    CHECK(std::abs(make_rotation_coin(0, 0, th).matrix().determinant() - 1.0) < 1e-14);
}

TEST_CASE("rotation coin entries carry the alpha and beta phases") {
  const double a = 0.3, b = 0.7, th = 1.1;
  const CoinOperator c = make_rotation_coin(a, b, th);
  const oracle::cplx i{0, 1};
  CHECK(std::abs(c(0, 0) - std::exp(i * (a + b)) * std::cos(th)) < 1e-15);
  CHECK(std::abs(c(0, 1) - std::exp(i * (a - b)) * std::sin(th)) < 1e-15);
  CHECK(std::abs(c(1, 0) + std::exp(-i * (a - b)) * std::sin(th)) < 1e-15);
  CHECK(std::abs(c(1, 1) - std::exp(-i * (a + b)) * std::cos(th)) < 1e-15);
}

TEST_CASE("grover coin") {
  const CoinOperator g = grover_coin();
  CHECK(max_abs_diff(g.matrix(), oracle::grover()) == 0.0);
  CHECK(max_abs_diff(g.matrix() * g.matrix(), Eigen::Matrix4cd::Identity()) < 1e-15);
  for (CoinOrdering o : {CoinOrdering::XyCross, CoinOrdering::DiagAnti, CoinOrdering::XxYy})
    CHECK(max_abs_diff(reorder_coin(g, o).matrix(), g.matrix()) == 0.0);
}

TEST_CASE("dft coin") {
  const CoinOperator d = dft_coin();
  CHECK(max_abs_diff(d.matrix(), oracle::dft()) < 1e-16);
  const oracle::cplx i{0, 1};
  CHECK(std::abs(d(1, 1) - 0.5 * i) < 1e-16);
  CHECK(std::abs(d(1, 3) + 0.5 * i) < 1e-16);
  CHECK(d.unitarity_error() < 1e-14);
  const Eigen::MatrixXcd m = d.matrix();
  CHECK(max_abs_diff(m * m * m * m, Eigen::Matrix4cd::Identity()) < 1e-14);
}

TEST_CASE("hadamard2 coin and its xx-yy form") {
  const CoinOperator h = hadamard2_coin();
  CHECK(max_abs_diff(h.matrix(), oracle::hadamard2()) == 0.0);
  CHECK(max_abs_diff(h.matrix() * h.matrix(), Eigen::Matrix4cd::Identity()) < 1e-15);
  // H (x) H with H = [[1, 1], [1, -1]] / sqrt2.
  Eigen::Matrix2d hh;
  hh << 1, 1, 1, -1;
  hh /= std::sqrt(2.0);
  Eigen::Matrix4d kron;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) kron(2 * a + c, 2 * b + d) = hh(a, b) * hh(c, d);
  CHECK(max_abs_diff(h.matrix(), kron.cast<oracle::cplx>()) < 1e-15);

  Eigen::Matrix4cd printed;
  printed << 1, 1, 1, 1,
             1, 1, -1, -1,
             1, -1, -1, 1,
             1, -1, 1, -1;
  printed *= 0.5;
  const CoinOperator p = reorder_coin(h, CoinOrdering::XxYy);
  CHECK(p.ordering() == CoinOrdering::XxYy);
  CHECK(max_abs_diff(p.matrix(), printed) == 0.0);
  CHECK(max_abs_diff(hadamard2_permuted_coin().matrix(), printed) == 0.0);
}

TEST_CASE("reorder round trip and spectrum") {
  const CoinOperator d = dft_coin();
  for (CoinOrdering o : {CoinOrdering::DiagAnti, CoinOrdering::XxYy}) {
    const CoinOperator there = reorder_coin(d, o);
    CHECK(max_abs_diff(reorder_coin(there, CoinOrdering::XyCross).matrix(), d.matrix()) == 0.0);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> e1(d.matrix()), e2(there.matrix());
    auto v1 = e1.eigenvalues(), v2 = e2.eigenvalues();
    for (Eigen::Index i = 0; i < 4; ++i) {
      double best = 1e9;
      for (Eigen::Index j = 0; j < 4; ++j) best = std::min(best, std::abs(v1(i) - v2(j)));
      CHECK(best < 1e-12);
    }
  }
  CHECK_THROWS_AS(reorder_coin(make_rotation_coin(0, 0, 1), CoinOrdering::XxYy), Error);
}

TEST_CASE("coin validation") {
  Eigen::MatrixXcd bad(2, 2);
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(CoinOperator(bad, CoinOrdering::Qubit), Error);
  CHECK_THROWS_AS(CoinOperator(Eigen::MatrixXcd::Identity(2, 2), CoinOrdering::XyCross), Error);
  CHECK_THROWS_AS(CoinOperator(Eigen::MatrixXcd::Identity(3, 3), CoinOrdering::Qubit), Error);
  CHECK_THROWS_AS(coin_by_name("nope"), Error);
  CHECK(coin_by_name("hadamard2-permuted").ordering() == CoinOrdering::XxYy);
  CHECK(ordering_from_string(to_string(CoinOrdering::DiagAnti)) == CoinOrdering::DiagAnti);
}
