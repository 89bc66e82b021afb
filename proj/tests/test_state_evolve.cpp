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

#include <random>

#include "eqw/error.hpp"
#include "eqw/evolve.hpp"
#include "eqw/field.hpp"
#include "eqw/state.hpp"
#include "oracles.hpp"

using namespace eqw;
using oracle::cplx;
using oracle::kPi;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);

Eigen::VectorXcd to_vector(const WalkState2D& st, const oracle::Lattice2D& l) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(l.size());
  for (int x = -l.n; x <= l.n; ++x)
    for (int y = -l.n; y <= l.n; ++y)
      for (int s = 0; s < l.dim; ++s) v(l.index(x, y, s)) = st.amplitude(x, y, s);
  return v;
}

double max_diff(const WalkState2D& st, const Eigen::VectorXcd& v, const oracle::Lattice2D& l) {
  return (to_vector(st, l) - v).cwiseAbs().maxCoeff();
}

WalkState2D random_state_2d(int dim, long cap, long spread, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  WalkState2D st(-cap - 1, cap + 1, -cap - 1, cap + 1, dim,
                 dim == 2 ? CoinOrdering::Qubit : CoinOrdering::XyCross);
  double n = 0;
  std::vector<std::tuple<long, long, int, cplx>> vals;
  for (long x = -spread; x <= spread; ++x)
    for (long y = -spread; y <= spread; ++y)
      for (int s = 0; s < dim; ++s) {
        const cplx a{g(rng), g(rng)};
        n += std::norm(a);
        vals.emplace_back(x, y, s, a);
      }
  for (auto& [x, y, s, a] : vals) st.set_amplitude(x, y, s, a / std::sqrt(n));
  return st;
}

}  // namespace

TEST_CASE("localized 1D state") {
  const std::vector<cplx> up{1.0, 0.0};
  const WalkState1D st = new_localized_1d(up, 10);
  CHECK(st.x_min() == -11);
  CHECK(st.x_max() == 11);
  CHECK(st.amplitude(0, 0) == cplx{1.0, 0.0});
  CHECK(st.norm_squared() == 1.0);
  CHECK(st.time() == 0);
  const std::vector<cplx> sym{r2, cplx{0, r2}};
  CHECK(std::abs(new_localized_1d(sym, 100).norm_squared() - 1.0) < 1e-15);
  const std::vector<cplx> bad{1.0, 1.0};
  CHECK_THROWS_AS(new_localized_1d(bad, 3), Error);
  CHECK_THROWS_AS(new_localized_1d(up, -1), Error);
}

TEST_CASE("localized 2D states") {
  const std::vector<cplx> g{0.5, -0.5, -0.5, 0.5};
  const WalkState2D st = new_localized_2d(g, 600);
  CHECK(st.x_min() == -601);
  CHECK(st.y_max() == 601);
  CHECK(st.coin_dim() == 4);
  CHECK(st.ordering() == CoinOrdering::XyCross);
  CHECK(st.amplitude(0, 0, 1) == cplx{-0.5, 0});
  const std::vector<cplx> d{0.5, cplx{0, 0.5}, cplx{0, 0.5}, -0.5};
  CHECK(std::abs(new_localized_2d(d, 600).norm_squared() - 1.0) < 1e-15);
  const std::vector<cplx> one{1.0, 0.0, 0.0, 0.0};
  const WalkState2D s1 = new_localized_2d(one, 5);
  int nonzero = 0;
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y)
      for (int s = 0; s < 4; ++s) nonzero += s1.amplitude(x, y, s) != cplx{};
  CHECK(nonzero == 1);
  const std::vector<cplx> three{1.0, 0.0, 0.0};
  CHECK_THROWS_AS(new_localized_2d(three, 5), Error);
}

TEST_CASE("one 1D Hadamard step by hand") {
  const std::vector<cplx> up{1.0, 0.0};
  WalkState1D st = new_localized_1d(up, 3);
  step_1d(st, make_rotation_coin(0, 0, kPi / 4), FieldPhase{});
  CHECK(std::abs(st.amplitude(1, 0) - r2) < 1e-15);
  CHECK(std::abs(st.amplitude(-1, 1) + r2) < 1e-15);
  CHECK(st.amplitude(1, 1) == cplx{});
  CHECK(st.amplitude(-1, 0) == cplx{});
  CHECK(st.time() == 1);
}

TEST_CASE("identity coin moves ballistically") {
  const std::vector<cplx> up{1.0, 0.0};
  WalkState1D st = new_localized_1d(up, 20);
  Walk1D w(make_rotation_coin(0, 0, 0), FieldPhase{});
  for (int t = 0; t < 20; ++t) w.step(st);
  CHECK(st.amplitude(20, 0) == cplx{1.0, 0.0});
}

TEST_CASE("1D walk at phi/2pi = 1/2 has the field-free distribution") {
  // exp(i pi x) only flips signs, and every path reaching (x, t) visits sites
  // with the same summed parity, so probabilities cannot change.
  const std::vector<cplx> sym{r2, cplx{0, r2}};
  WalkState1D a = new_localized_1d(sym, 50);
  WalkState1D b = new_localized_1d(sym, 50);
  Walk1D wa(make_rotation_coin(0, 0, kPi / 4), FieldPhase::rational(1, 2));
  Walk1D wb(make_rotation_coin(0, 0, kPi / 4), FieldPhase{});
  double worst = 0, recurrence = 0;
  std::vector<std::vector<double>> p;
  for (int t = 0; t <= 44; ++t) {
    std::vector<double> row;
    for (long x = -50; x <= 50; ++x) {
      const double pa = std::norm(a.amplitude(x, 0)) + std::norm(a.amplitude(x, 1));
      const double pb = std::norm(b.amplitude(x, 0)) + std::norm(b.amplitude(x, 1));
      worst = std::max(worst, std::fabs(pa - pb));
      row.push_back(pa);
    }
    p.push_back(row);
    if (t < 44) {
      wa.step(a);
      wb.step(b);
    }
  }
  CHECK(worst < 1e-13);
  for (int t = 0; t <= 40; ++t)
    for (std::size_t i = 0; i < p[t].size(); ++i) recurrence = std::max(recurrence, std::fabs(p[t + 4][i] - p[t][i]));
  // The distribution spreads ballistically, so it does not repeat every four steps.
  CHECK(recurrence > 0.1);
}

TEST_CASE("1D stepper matches the dense unitary") {
  for (double phi : {0.0, 2 * kPi / 120, 2 * kPi / 3, 0.7}) {
    const int t_max = 10;
    const int n = t_max + 1;
    const std::vector<cplx> sym{r2, cplx{0, r2}};
    WalkState1D st = new_localized_1d(sym, t_max);
    const FieldPhase fp = phi == 0.7 ? FieldPhase::real(phi)
                          : phi == 0.0 ? FieldPhase{}
                                       : FieldPhase::rational(1, std::lround(2 * kPi / phi));
    Walk1D w(make_rotation_coin(0, 0, kPi / 4), fp);
    const Eigen::MatrixXcd u = oracle::one_d_unitary(n, oracle::rotation(kPi / 4), fp.radians());
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * (2 * n + 1));
    v(n * 2) = sym[0];
    v(n * 2 + 1) = sym[1];
    for (int t = 1; t <= t_max; ++t) {
      w.step(st);
      v = u * v;
      double worst = 0;
      for (long x = -n; x <= n; ++x)
        for (int s = 0; s < 2; ++s) worst = std::max(worst, std::abs(st.amplitude(x, s) - v((x + n) * 2 + s)));
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("Grover one step from the symmetric state") {
  const std::vector<cplx> g{0.5, -0.5, -0.5, 0.5};
  WalkState2D st = new_localized_2d(g, 2);
  step_grover_like_2d(st, grover_coin(), FieldPhase{}, FieldPhase{});
  for (auto [x, y] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
    double p = 0;
    for (int s = 0; s < 4; ++s) p += std::norm(st.amplitude(x, y, s));
    CHECK(std::fabs(p - 0.25) < 1e-15);
  }
}

TEST_CASE("one step from the origin reaches only nearest neighbours") {
  std::mt19937_64 rng(7);
  for (const CoinOperator& c : {grover_coin(), dft_coin(), hadamard2_coin()}) {
    WalkState2D st = random_state_2d(4, 2, 0, rng);
    step_grover_like_2d(st, c, FieldPhase{}, FieldPhase{});
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y) {
        const bool nn = std::abs(x) + std::abs(y) == 1;
        if (nn) continue;
        for (int s = 0; s < 4; ++s) CHECK(st.amplitude(x, y, s) == cplx{});
      }
  }
}

TEST_CASE("alternate walk moves diagonally") {
  const std::vector<cplx> up{1.0, 0.0};
  WalkState2D st = new_localized_2d(up, 3);
  step_alternate_2d(st, make_rotation_coin(0, 0, kPi / 4), make_rotation_coin(0, 0, kPi / 4),
                    FieldPhase{}, FieldPhase{});
  double corners = 0;
  for (int x : {-1, 1})
    for (int y : {-1, 1}) corners += std::norm(st.amplitude(x, y, 0)) + std::norm(st.amplitude(x, y, 1));
  CHECK(std::fabs(corners - 1.0) < 1e-15);

  WalkState2D b = new_localized_2d(up, 7);
  Walk2D id = Walk2D::alternate(make_rotation_coin(0, 0, 0), make_rotation_coin(0, 0, 0), FieldPhase{},
                                FieldPhase{});
  for (int t = 0; t < 7; ++t) id.step(b);
  CHECK(b.amplitude(7, 7, 0) == cplx{1.0, 0.0});
}

TEST_CASE("four-state steppers match the dense unitary") {
  const int t_max = 10;
  const oracle::Lattice2D l{t_max + 1, 4};
  struct Case {
    CoinOperator coin;
    Eigen::Matrix4cd dense;
  };
  const std::vector<Case> cases = {{grover_coin(), oracle::grover()},
                                   {dft_coin(), oracle::dft()},
                                   {hadamard2_coin(), oracle::hadamard2()}};
  const std::vector<std::pair<FieldPhase, FieldPhase>> fields = {
      {FieldPhase{}, FieldPhase{}},
      {FieldPhase::rational(1, 120), FieldPhase{}},
      {FieldPhase::rational(1, 7), FieldPhase::rational(-2, 5)},
      {FieldPhase::real(0.31), FieldPhase::real(-1.7)}};
  std::mt19937_64 rng(11);
  for (const Case& c : cases)
    for (const auto& [fx, fy] : fields) {
      const Eigen::MatrixXcd u = oracle::four_state_unitary(l, c.dense, fx.radians(), fy.radians());
      // A random seed cell exercises every parity class at once.
      WalkState2D st = random_state_2d(4, t_max + 1, 1, rng);
      Walk2D w = Walk2D::four_state(c.coin, fx, fy);
      Eigen::VectorXcd v = to_vector(st, l);
      WalkState2D loc = new_localized_2d(std::vector<cplx>{0.5, -0.5, -0.5, 0.5}, t_max);
      Eigen::VectorXcd vl = to_vector(loc, l);
      double worst = 0, worst_loc = 0;
      for (int t = 1; t <= t_max - 1; ++t) {
        w.step(st);
        w.step(loc);
        v = u * v;
        vl = u * vl;
        worst = std::max(worst, max_diff(st, v, l));
        worst_loc = std::max(worst_loc, max_diff(loc, vl, l));
      }
      CHECK(worst < 1e-12);
      CHECK(worst_loc < 1e-12);
    }
}

TEST_CASE("alternate stepper matches the dense unitary") {
  const int t_max = 10;
  const oracle::Lattice2D l{t_max + 1, 2};
  std::mt19937_64 rng(5);
  for (auto [tx, ty] : {std::pair{kPi / 4, kPi / 4}, {kPi / 4 + 0.2, kPi / 4 - 0.2}, {0.3, 1.2}})
    for (auto [px, py] : {std::pair{0.0, 0.0}, {2 * kPi / 120, 0.0}, {0.4, -0.9}}) {
      const FieldPhase fx = px == 0 ? FieldPhase{} : FieldPhase::real(px);
      const FieldPhase fy = py == 0 ? FieldPhase{} : FieldPhase::real(py);
      const Eigen::MatrixXcd u =
          oracle::alternate_unitary(l, oracle::rotation(tx), oracle::rotation(ty), px, py);
      Walk2D w = Walk2D::alternate(make_rotation_coin(0, 0, tx), make_rotation_coin(0, 0, ty), fx, fy);
      WalkState2D st = random_state_2d(2, t_max + 1, 1, rng);
      Eigen::VectorXcd v = to_vector(st, l);
      WalkState2D loc = new_localized_2d(std::vector<cplx>{r2, cplx{0, r2}}, t_max);
      Eigen::VectorXcd vl = to_vector(loc, l);
      double worst = 0;
      for (int t = 1; t <= t_max - 1; ++t) {
        w.step(st);
        w.step(loc);
        v = u * v;
        vl = u * vl;
        worst = std::max({worst, max_diff(st, v, l), max_diff(loc, vl, l)});
      }
      CHECK(worst < 1e-12);
    }
}

TEST_CASE("norm and light cone") {
  const std::vector<cplx> d{0.5, cplx{0, 0.5}, cplx{0, 0.5}, -0.5};
  WalkState2D st = new_localized_2d(d, 60);
  Walk2D w = Walk2D::four_state(dft_coin(), FieldPhase::rational(1, 12), FieldPhase::real(0.2));
  for (int t = 1; t <= 60; ++t) {
    w.step(st);
    CHECK(std::fabs(st.norm_squared() - 1.0) < 1e-12);
    long reach = 0;
    for (long x = -61; x <= 61; ++x)
      for (long y = -61; y <= 61; ++y) {
        double p = 0;
        for (int s = 0; s < 4; ++s) p += std::norm(st.amplitude(x, y, s));
        if (p > 1e-30) reach = std::max({reach, std::abs(x), std::abs(y)});
      }
    CHECK(reach <= t);
  }
}

TEST_CASE("boundary contact is an error naming the step") {
  const std::vector<cplx> up{1.0, 0.0};
  WalkState1D st = new_localized_1d(up, 2);
  Walk1D w(make_rotation_coin(0, 0, kPi / 4), FieldPhase{});
  for (int t = 0; t < 3; ++t) w.step(st);
  try {
    w.step(st);
    FAIL("expected a boundary error");
  } catch (const BoundaryError& e) {
    CHECK(e.step() == 4);
    CHECK(e.code() == ErrorCode::Numerical);
  }
  WalkState2D s2 = new_localized_2d(std::vector<cplx>{1.0, 0.0, 0.0, 0.0}, 1);
  Walk2D g = Walk2D::four_state(grover_coin(), FieldPhase{}, FieldPhase{});
  g.step(s2);
  g.step(s2);
  CHECK_THROWS_AS(g.step(s2), BoundaryError);
}

TEST_CASE("ordering and dimension mismatches are rejected") {
  CHECK_THROWS_AS(Walk2D::four_state(hadamard2_permuted_coin(), FieldPhase{}, FieldPhase{}), Error);
  WalkState2D q = new_localized_2d(std::vector<cplx>{1.0, 0.0}, 3);
  Walk2D g = Walk2D::four_state(grover_coin(), FieldPhase{}, FieldPhase{});
  CHECK_THROWS_AS(g.step(q), Error);
}

TEST_CASE("electric phase with phi and -phi is the identity") {
  for (const FieldPhase& f : {FieldPhase::rational(3, 7), FieldPhase::real(0.123), FieldPhase::rational(-1, 120)}) {
    const auto a = phase_factors(f, -40, 81);
    const auto b = phase_factors(f.negated(), -40, 81);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] * b[i] - 1.0) < 1e-15);
  }
}

TEST_CASE("rational phase table agrees with direct evaluation") {
  const FieldPhase f = FieldPhase::rational(1, 120);
  const auto a = phase_factors(f, -1001, 2003);
  for (long i = 0; i < 2003; i += 37) {
    const double x = static_cast<double>(i - 1001);
    CHECK(std::abs(a[static_cast<std::size_t>(i)] - std::polar(1.0, 2 * kPi * x / 120)) < 1e-12);
  }
  CHECK(FieldPhase::rational(2, -4) == FieldPhase::rational(-1, 2));
  CHECK(FieldPhase::rational(2, 240).to_string() == "2pi*1/120");
  CHECK_THROWS_AS(FieldPhase::rational(1, 0), Error);
  CHECK_THROWS_AS(FieldPhase::real(std::nan("")), Error);
}

namespace {

struct Counter : Observer {
  std::vector<long> times;
  void observe(const WalkState1D& s) override { times.push_back(s.time()); }
  void observe(const WalkState2D& s) override { times.push_back(s.time()); }
};

}  // namespace

TEST_CASE("run calls observers from t = 0 and is deterministic") {
  WalkSpec spec;
  spec.family = WalkFamily::Grover;
  spec.field_x = FieldPhase::rational(1, 120);
  spec.steps = 30;
  spec.initial = {0.5, -0.5, -0.5, 0.5};
  Counter c;
  Observer* obs[] = {&c};
  const RunResult a = run(spec, obs);
  REQUIRE(c.times.size() == 31);
  CHECK(c.times.front() == 0);
  CHECK(c.times.back() == 30);
  const RunResult b = run(spec);
  const auto& sa = std::get<WalkState2D>(a.state);
  const auto& sb = std::get<WalkState2D>(b.state);
  CHECK(std::equal(sa.raw().begin(), sa.raw().end(), sb.raw().begin()));

  spec.steps = 0;
  const RunResult z = run(spec);
  CHECK(std::get<WalkState2D>(z.state).amplitude(0, 0, 1) == cplx{-0.5, 0});

  spec.initial = {1.0, 0.0};
  CHECK_THROWS_AS(run(spec), Error);
  CHECK(family_from_string("hadamard") == WalkFamily::Hadamard);
  CHECK_THROWS_AS(family_from_string("x"), Error);
}

TEST_CASE("coin4 family reorders a named coin") {
  WalkSpec a, b;
  a.family = WalkFamily::Hadamard;
  b.family = WalkFamily::Coin4;
  b.coin4 = "hadamard2-permuted";
  a.steps = b.steps = 12;
  a.initial = b.initial = {0.5, cplx{0, 0.5}, cplx{0, 0.5}, -0.5};
  const auto sa = std::get<WalkState2D>(run(a).state);
  const auto sb = std::get<WalkState2D>(run(b).state);
  double worst = 0;
  for (std::size_t i = 0; i < sa.raw().size(); ++i) worst = std::max(worst, std::abs(sa.raw()[i] - sb.raw()[i]));
  CHECK(worst < 1e-15);
}
