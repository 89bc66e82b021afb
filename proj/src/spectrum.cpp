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

#include "eqw/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "eqw/error.hpp"

namespace eqw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double safe_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

BranchPair pair_from_cos(double c) {
  const double w = safe_acos(c);
  return {w, -w};
}

cplx ipow(cplx z, int n) {
  cplx r{1.0, 0.0};
  for (; n > 0; n >>= 1) {
    if (n & 1) r *= z;
    z *= z;
  }
  return r;
}

double rpow(double x, int n) { return std::real(ipow(cplx{x, 0.0}, n)); }

Eigen::Matrix2cd shift2(double k) {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  s(0, 0) = std::polar(1.0, k);
  s(1, 1) = std::polar(1.0, -k);
  return s;
}

CoinOperator four_state_coin(const WalkSpec& spec) {
  switch (spec.family) {
    case WalkFamily::Grover: return grover_coin();
    case WalkFamily::Dft: return dft_coin();
    case WalkFamily::Hadamard: return hadamard2_coin();
    case WalkFamily::Coin4:
      return reorder_coin(coin_by_name(spec.coin4, spec.alpha, spec.beta, spec.theta),
                          CoinOrdering::XyCross);
    default: break;
  }
  fail(ErrorCode::InvalidArgument, "not a 4-state family");
}

}  // namespace

double fold_phase(double omega) {
  double w = std::fmod(omega, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double circular_distance(double a, double b) {
  const double d = std::fabs(fold_phase(a) - fold_phase(b));
  return std::min(d, kTwoPi - d);
}

std::vector<double> eigenphases(const Eigen::MatrixXcd& u) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u, false);
  if (es.info() != Eigen::Success) fail(ErrorCode::Numerical, "eigenvalue solver did not converge");
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(u.rows()));
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    w.push_back(fold_phase(-std::arg(es.eigenvalues()(i))));
  std::sort(w.begin(), w.end());
  return w;
}

BranchPair dispersion_1d(double theta, double k) { return pair_from_cos(std::cos(theta) * std::cos(k)); }

BranchPair effective_dispersion_1d(double theta, int p, double k) {
  if (p < 1) fail(ErrorCode::InvalidArgument, "p must be >= 1");
  const double cp = rpow(std::cos(theta), p);
  const double pk = static_cast<double>(p) * k;
  if (p % 2 == 1) return pair_from_cos(cp * std::cos(pk));
  const double sign = ((p / 2) % 2 == 0) ? -1.0 : 1.0;  // (-1)^(1 + p/2)
  return pair_from_cos((1.0 - cp) * sign - cp * std::cos(pk));
}

GroupVelocityMax max_group_velocity_1d(double theta, int p) {
  if (p < 1) fail(ErrorCode::InvalidArgument, "p must be >= 1");
  const double cp = std::fabs(rpow(std::cos(theta), p));
  const double pd = static_cast<double>(p);
  if (p % 2 == 1) return {cp, kPi / (2.0 * pd)};
  return {std::sqrt(cp), p % 4 == 0 ? 0.0 : kPi / pd};
}

double effective_group_velocity_1d(double theta, int p, double k, double h) {
  const double wp = effective_dispersion_1d(theta, p, k + h).plus;
  const double wm = effective_dispersion_1d(theta, p, k - h).plus;
  return (wp - wm) / (2.0 * h * static_cast<double>(p));
}

BranchPair dispersion_alternate(double theta_x, double theta_y, double kx, double ky) {
  return pair_from_cos(std::cos(kx + ky) * std::cos(theta_x) * std::cos(theta_y) -
                       std::cos(kx - ky) * std::sin(theta_x) * std::sin(theta_y));
}

std::string_view to_string(Axis axis) { return axis == Axis::X ? "x" : "y"; }

Axis axis_from_string(std::string_view name) {
  if (name == "x") return Axis::X;
  if (name == "y") return Axis::Y;
  fail(ErrorCode::InvalidArgument, "unknown axis '" + std::string(name) + "'");
}

cplx stroboscopic_r(double theta_x, double theta_y, double kx, double ky, Axis field_axis) {
  const double kf = field_axis == Axis::X ? kx : ky;
  const double ko = field_axis == Axis::X ? ky : kx;
  const double cc = std::cos(theta_x) * std::cos(theta_y);
  const double ss = std::sin(theta_x) * std::sin(theta_y);
  return std::polar(1.0, kf) * (cc * std::polar(1.0, ko) - ss * std::polar(1.0, -ko));
}

BranchPair stroboscopic_dispersion_alternate(double theta_x, double theta_y, int p, double kx,
                                             double ky, Axis field_axis) {
  if (p < 1) fail(ErrorCode::InvalidArgument, "p must be >= 1");
  const cplx r = stroboscopic_r(theta_x, theta_y, kx, ky, field_axis);
  const double mod = std::abs(r);
  if (mod < 1e-14) {
    WalkSpec spec;
    spec.family = WalkFamily::Alternate;
    spec.theta_x = theta_x;
    spec.theta_y = theta_y;
    const std::vector<double> w = eigenphases(stroboscopic_unitary(spec, p, kx, ky, field_axis));
    // Eigenphases of an SU(2) product come as a +-omega pair.
    const double c = 0.5 * (std::cos(w[0]) + std::cos(w[1]));
    return pair_from_cos(c);
  }
  const double mp = rpow(mod, p);
  const double phase_term = mp * std::cos(static_cast<double>(p) * safe_acos(r.real() / mod));
  if (p % 2 == 1) return pair_from_cos(phase_term);
  const double sign = ((p / 2) % 2 == 0) ? -1.0 : 1.0;  // (-1)^(p/2 + 1)
  return pair_from_cos(-phase_term + sign * (1.0 - mp));
}

double hadamard2_s(double kx, double ky) {
  const double cx = std::cos(kx), cy = std::cos(ky);
  return cx * cx + cy * cy + 6.0 * cx * cy;
}

HadamardBranches dispersion_hadamard2(double kx, double ky) {
  // omega1 lies in [pi/2, pi] and omega2 in [0, pi/2]. Near the ends arccos
  // loses half the digits, so use the rationalised distances from -1 and +1:
  //   1 + cos w1 = 2(1 + cx)(1 - cy) / (4 + cx - cy + root)
  //   1 - cos w2 = 2(1 - cx)(1 + cy) / (4 - cx + cy + root)
  const double root = std::sqrt(std::max(0.0, hadamard2_s(kx, ky) + 8.0));
  const double cx = std::cos(kx), cy = std::cos(ky);
  const double hx = std::sin(kx / 2), hy = std::sin(ky / 2);
  const double one_m_cx = 2 * hx * hx, one_m_cy = 2 * hy * hy;
  const double up1 = 2 * (2 - one_m_cx) * one_m_cy / (4 + cx - cy + root);
  const double dn2 = 2 * one_m_cx * (2 - one_m_cy) / (4 - cx + cy + root);
  const auto from_gap = [](double gap) { return 2 * std::asin(std::sqrt(std::clamp(gap / 2, 0.0, 1.0))); };
  return {std::numbers::pi - from_gap(up1), from_gap(dn2)};
}

double dft_residual(double omega, double kx, double ky) {
  const double s = std::sin(omega);
  return std::cos(2.0 * omega) + 2.0 * std::sin(2.0 * omega) - std::cos(kx - ky) -
         2.0 * (s + std::sin(kx) + std::sin(ky) + std::cos(kx) + std::cos(ky)) * s;
}

std::array<double, 4> dispersion_dft(double kx, double ky) {
  const auto f = [&](double w) { return dft_residual(w, kx, ky); };
  std::vector<double> roots;
  const int n = kDftScanSamples;
  double w0 = 0.0, f0 = f(0.0);
  for (int i = 0; i < n; ++i) {
    if (f0 == 0.0) roots.push_back(w0);
    const double w1 = kTwoPi * static_cast<double>(i + 1) / n;
    const double f1 = (i + 1 == n) ? f(0.0) : f(w1);
    if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0)) {
      double lo = w0, hi = w1, flo = f0;
      while (hi - lo > kDftBisectTolerance) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(fold_phase(0.5 * (lo + hi)));
    }
    w0 = w1;
    f0 = f1;
  }
  if (roots.size() != 4) {
    WalkSpec spec;
    spec.family = WalkFamily::Dft;
    roots = eigenphases(momentum_unitary(spec, kx, ky));
  }
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::fabs(f(roots[i])) > kDftResidualTolerance)
      fail(ErrorCode::Numerical, "DFT dispersion: no consistent root set at k = (" +
                                     std::to_string(kx) + ", " + std::to_string(ky) + ")");
    out[i] = roots[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

LemmaInput make_lemma_input(const Eigen::Matrix2cd& a, int m, cplx eta) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "m must be >= 1");
  constexpr double tol = 1e-12;
  if (std::abs(ipow(eta, m) - 1.0) > tol)
    fail(ErrorCode::InvalidArgument, "eta is not an m-th root of unity");
  for (int j = 1; j < m; ++j)
    if (std::abs(ipow(eta, j) - 1.0) <= tol)
      fail(ErrorCode::InvalidArgument, "eta is not a primitive m-th root of unity");
  return {a, m, eta};
}

cplx lemma_trace_closed(const LemmaInput& in) {
  const cplx a = in.a(0, 0), d = in.a(1, 1);
  const int m = in.m;
  if (m % 2 == 1) return ipow(a, m) + ipow(d, m);
  const int h = m / 2;
  const double sign = (h % 2 == 0) ? 1.0 : -1.0;
  return -(ipow(a, m) + ipow(d, m)) + 2.0 * sign * (ipow(a * d, h) - ipow(in.a.determinant(), h));
}

cplx lemma_trace_direct(const LemmaInput& in) {
  Eigen::Matrix2cd prod = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd rj = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
  r(0, 0) = in.eta;
  r(1, 1) = 1.0 / in.eta;
  for (int j = 0; j < in.m; ++j) {
    prod = prod * in.a * rj;
    rj = rj * r;
  }
  return prod.trace();
}

Eigen::MatrixXcd momentum_unitary(const WalkSpec& spec, double kx, double ky) {
  switch (spec.family) {
    case WalkFamily::OneD:
      return shift2(kx) * make_rotation_coin(spec.alpha, spec.beta, spec.theta).matrix();
    case WalkFamily::Alternate: {
      const Eigen::MatrixXcd cx = make_rotation_coin(spec.alpha, spec.beta, spec.theta_x).matrix();
      const Eigen::MatrixXcd cy = make_rotation_coin(spec.alpha, spec.beta, spec.theta_y).matrix();
      return shift2(ky) * cy * shift2(kx) * cx;
    }
    default: break;
  }
  // Slots X+, Y-, Y+, X- move by (1,0), (0,-1), (0,1), (-1,0).
  Eigen::MatrixXcd u = four_state_coin(spec).matrix();
  const std::array<cplx, 4> s{std::polar(1.0, kx), std::polar(1.0, -ky), std::polar(1.0, ky),
                              std::polar(1.0, -kx)};
  for (int r = 0; r < 4; ++r) u.row(r) *= s[static_cast<std::size_t>(r)];
  return u;
}

Eigen::MatrixXcd stroboscopic_unitary(const WalkSpec& spec, int p, double kx, double ky,
                                      Axis field_axis) {
  if (p < 1) fail(ErrorCode::InvalidArgument, "p must be >= 1");
  const double phi = kTwoPi / static_cast<double>(p);
  const int dim = (spec.family == WalkFamily::OneD || spec.family == WalkFamily::Alternate) ? 2 : 4;
  Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(dim, dim);
  for (int j = 1; j <= p; ++j) {
    const double shift = phi * static_cast<double>(j);
    const bool along_x = field_axis == Axis::X || spec.family == WalkFamily::OneD;
    prod = prod * momentum_unitary(spec, along_x ? kx + shift : kx, along_x ? ky : ky + shift);
  }
  return prod;
}

double BandGrid::at(std::size_t ix, std::size_t iy, int branch) const {
  const std::size_t ny = dims == 1 ? 1 : ky.size();
  return omega[(ix * ny + iy) * static_cast<std::size_t>(branches) +
               static_cast<std::size_t>(branch)];
}

bool has_closed_form(const BandSpec& spec) {
  const WalkSpec& w = spec.walk;
  const bool real_coin = w.alpha == 0.0 && w.beta == 0.0;
  switch (w.family) {
    case WalkFamily::OneD:
    case WalkFamily::Alternate: return real_coin;
    case WalkFamily::Hadamard:
    case WalkFamily::Dft: return spec.p == 1;
    default: return false;
  }
}

std::vector<double> closed_form_bands(const BandSpec& spec, double kx, double ky) {
  const WalkSpec& w = spec.walk;
  std::vector<double> out;
  switch (w.family) {
    case WalkFamily::OneD: {
      const BranchPair b = spec.p == 1 ? dispersion_1d(w.theta, kx)
                                       : effective_dispersion_1d(w.theta, spec.p, kx);
      out = {fold_phase(b.plus), fold_phase(b.minus)};
      break;
    }
    case WalkFamily::Alternate: {
      const BranchPair b =
          spec.p == 1 ? dispersion_alternate(w.theta_x, w.theta_y, kx, ky)
                      : stroboscopic_dispersion_alternate(w.theta_x, w.theta_y, spec.p, kx, ky,
                                                          spec.field_axis);
      out = {fold_phase(b.plus), fold_phase(b.minus)};
      break;
    }
    case WalkFamily::Hadamard: {
      const HadamardBranches h = dispersion_hadamard2(kx, ky);
      out = {fold_phase(h.omega1), fold_phase(-h.omega1), fold_phase(h.omega2),
             fold_phase(-h.omega2)};
      break;
    }
    case WalkFamily::Dft: {
      const auto r = dispersion_dft(kx, ky);
      out.assign(r.begin(), r.end());
      break;
    }
    default: fail(ErrorCode::InvalidArgument, "no closed-form dispersion for this family");
  }
  std::sort(out.begin(), out.end());
  return out;
}

double match_phases(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) fail(ErrorCode::InvalidArgument, "phase sets differ in size");
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
      worst = std::max(worst, circular_distance(a[i], b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

BandGrid sample_bands(const BandSpec& spec) {
  if (spec.resolution < 1) fail(ErrorCode::InvalidArgument, "resolution must be >= 1");
  if (spec.p < 1) fail(ErrorCode::InvalidArgument, "p must be >= 1");
  const bool one_d = spec.walk.family == WalkFamily::OneD;
  const double pd = static_cast<double>(spec.p);
  // The p-step product is 2pi/p periodic along the field axis.
  const double lx = (spec.p > 1 && (one_d || spec.field_axis == Axis::X)) ? kPi / pd : kPi;
  const double ly = (spec.p > 1 && !one_d && spec.field_axis == Axis::Y) ? kPi / pd : kPi;
  const auto axis = [&](double half) {
    std::vector<double> k(static_cast<std::size_t>(spec.resolution));
    for (int i = 0; i < spec.resolution; ++i)
      k[static_cast<std::size_t>(i)] =
          spec.resolution == 1 ? 0.0 : -half + 2.0 * half * i / (spec.resolution - 1);
    return k;
  };

  BandGrid g;
  g.dims = one_d ? 1 : 2;
  g.branches = (one_d || spec.walk.family == WalkFamily::Alternate) ? 2 : 4;
  g.kx = axis(lx);
  if (!one_d) g.ky = axis(ly);
  g.closed_form = has_closed_form(spec);
  const std::vector<double> ky_list = one_d ? std::vector<double>{0.0} : g.ky;
  g.omega.reserve(g.kx.size() * ky_list.size() * static_cast<std::size_t>(g.branches));
  for (double kx : g.kx)
    for (double ky : ky_list) {
      const std::vector<double> oracle =
          eigenphases(stroboscopic_unitary(spec.walk, spec.p, kx, ky, spec.field_axis));
      if (g.closed_form) {
        const std::vector<double> w = closed_form_bands(spec, kx, ky);
        g.max_oracle_residual = std::max(g.max_oracle_residual, match_phases(w, oracle));
        g.omega.insert(g.omega.end(), w.begin(), w.end());
      } else {
        g.omega.insert(g.omega.end(), oracle.begin(), oracle.end());
      }
    }
  return g;
}

}  // namespace eqw
