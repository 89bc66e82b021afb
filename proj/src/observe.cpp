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

#include "eqw/observe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eqw/error.hpp"

namespace eqw {

double Marginal1D::at(long x) const {
  const long i = x - x_min;
  if (i < 0 || i >= static_cast<long>(p.size())) return 0.0;
  return p[static_cast<std::size_t>(i)];
}

double Marginal1D::total() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

Distribution2D::Distribution2D(long x0, long x1, long y0, long y1)
    : x_min(x0), x_max(x1), y_min(y0), y_max(y1),
      p(static_cast<std::size_t>(x1 - x0 + 1) * static_cast<std::size_t>(y1 - y0 + 1), 0.0) {}

double Distribution2D::at(long x, long y) const {
  if (x < x_min || x > x_max || y < y_min || y > y_max) return 0.0;
  return p[static_cast<std::size_t>(x - x_min) * static_cast<std::size_t>(ny()) +
           static_cast<std::size_t>(y - y_min)];
}

double& Distribution2D::ref(long x, long y) {
  return p[static_cast<std::size_t>(x - x_min) * static_cast<std::size_t>(ny()) +
           static_cast<std::size_t>(y - y_min)];
}

double Distribution2D::total() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

Marginal1D position_marginal(const WalkState1D& state) {
  Marginal1D m;
  m.x_min = state.x_min();
  m.p.assign(static_cast<std::size_t>(state.sites()), 0.0);
  const SupportBox& b = state.support();
  for (long x = b.x0; x <= b.x1; ++x)
    m.p[static_cast<std::size_t>(x - m.x_min)] =
        std::norm(state.amplitude(x, 0)) + std::norm(state.amplitude(x, 1));
  return m;
}

Distribution2D position_marginal(const WalkState2D& state) {
  Distribution2D d(state.x_min(), state.x_max(), state.y_min(), state.y_max());
  const SupportBox& b = state.support();
  const int dim = state.coin_dim();
  const auto raw = state.raw();
  for (long x = b.x0; x <= b.x1; ++x) {
    long first = 0, stride = 1;
    if (!row_sites(state.parity_classes(), x, b.y0, b.y1, first, stride)) continue;
    for (long y = first; y <= b.y1; y += stride) {
      const cplx* a = raw.data() + state.index(x, y);
      double s = 0.0;
      for (int k = 0; k < dim; ++k) s += std::norm(a[k]);
      d.ref(x, y) = s;
    }
  }
  return d;
}

namespace {

// Raw moments accumulated row by row so sums do not depend on window size.
struct Moments {
  double m0 = 0, mx = 0, my = 0, mxx = 0, myy = 0, mxy = 0;

  void add_row(const Moments& r) {
    m0 += r.m0;
    mx += r.mx;
    my += r.my;
    mxx += r.mxx;
    myy += r.myy;
    mxy += r.mxy;
  }

  Widths finish() const {
    if (m0 <= 0.0) return {};
    const double ex = mx / m0, ey = my / m0;
    const double vx = std::max(0.0, mxx / m0 - ex * ex);
    const double vy = std::max(0.0, myy / m0 - ey * ey);
    const double cxy = mxy / m0 - ex * ey;
    Widths w;
    w.sigma_x = std::sqrt(vx);
    w.sigma_y = std::sqrt(vy);
    w.sigma_d = std::sqrt(std::max(0.0, 0.5 * (vx + vy) + cxy));
    w.sigma_a = std::sqrt(std::max(0.0, 0.5 * (vx + vy) - cxy));
    return w;
  }
};

}  // namespace

Widths widths(const WalkState1D& state) {
  const SupportBox& b = state.support();
  Moments m;
  for (long x = b.x0; x <= b.x1; ++x) {
    const double p = std::norm(state.amplitude(x, 0)) + std::norm(state.amplitude(x, 1));
    const double xd = static_cast<double>(x);
    m.m0 += p;
    m.mx += p * xd;
    m.mxx += p * xd * xd;
  }
  Widths w = m.finish();
  w.sigma_y = w.sigma_d = w.sigma_a = 0.0;
  return w;
}

Widths widths(const WalkState2D& state) {
  if (const RawMoments* r = state.step_moments()) {
    Moments m;
    m.m0 = r->m0;
    m.mx = r->mx;
    m.my = r->my;
    m.mxx = r->mxx;
    m.myy = r->myy;
    m.mxy = r->mxy;
    return m.finish();
  }
  const SupportBox& b = state.support();
  const int dim = state.coin_dim();
  const auto raw = state.raw();
  Moments total;
  for (long x = b.x0; x <= b.x1; ++x) {
    long first = 0, stride = 1;
    if (!row_sites(state.parity_classes(), x, b.y0, b.y1, first, stride)) continue;
    Moments row;
    const double xd = static_cast<double>(x);
    const cplx* a = raw.data() + state.index(x, first);
    for (long y = first; y <= b.y1; y += stride, a += stride * dim) {
      double p = 0.0;
      for (int k = 0; k < dim; ++k) p += std::norm(a[k]);
      const double yd = static_cast<double>(y);
      row.m0 += p;
      row.my += p * yd;
      row.myy += p * yd * yd;
      row.mxy += p * yd;
    }
    row.mx = row.m0 * xd;
    row.mxx = row.m0 * xd * xd;
    row.mxy *= xd;
    total.add_row(row);
  }
  return total.finish();
}

Widths widths(const Distribution2D& dist) {
  Moments total;
  for (long x = dist.x_min; x <= dist.x_max; ++x) {
    Moments row;
    const double xd = static_cast<double>(x);
    for (long y = dist.y_min; y <= dist.y_max; ++y) {
      const double p = dist.at(x, y);
      const double yd = static_cast<double>(y);
      row.m0 += p;
      row.my += p * yd;
      row.myy += p * yd * yd;
      row.mxy += p * yd;
    }
    row.mx = row.m0 * xd;
    row.mxx = row.m0 * xd * xd;
    row.mxy *= xd;
    total.add_row(row);
  }
  return total.finish();
}

void WidthSeries::push(long time, const Widths& w) {
  t.push_back(time);
  sigma_x.push_back(w.sigma_x);
  sigma_y.push_back(w.sigma_y);
  sigma_d.push_back(w.sigma_d);
  sigma_a.push_back(w.sigma_a);
}

Distribution2D rotate_frame_45(const Distribution2D& dist) {
  if (dist.p.empty()) return {};
  Distribution2D out(dist.x_min + dist.y_min, dist.x_max + dist.y_max, dist.x_min - dist.y_max,
                     dist.x_max - dist.y_min);
  int parity = -1;
  for (long x = dist.x_min; x <= dist.x_max; ++x)
    for (long y = dist.y_min; y <= dist.y_max; ++y) {
      const double p = dist.at(x, y);
      if (p == 0.0) continue;
      const int par = static_cast<int>(((x + y) % 2 + 2) % 2);
      if (parity < 0) parity = par;
      if (par != parity)
        fail(ErrorCode::InvalidArgument,
             "distribution mixes both sublattices (site " + std::to_string(x) + ", " +
                 std::to_string(y) + ")");
      out.ref(x + y, x - y) = p;
    }
  return out;
}

std::vector<PeriodScore> detect_periods(std::span<const double> series, long max_period) {
  if (max_period < 1) fail(ErrorCode::InvalidArgument, "max_period must be >= 1");
  const long n = static_cast<long>(series.size());
  if (n < 3 * max_period)
    fail(ErrorCode::InvalidArgument, "series too short: need " + std::to_string(3 * max_period) +
                                         " samples, have " + std::to_string(n));

  // Least-squares line through (i, s_i).
  double si = 0, ss = 0, sii = 0, sis = 0;
  for (long i = 0; i < n; ++i) {
    const double x = static_cast<double>(i);
    si += x;
    ss += series[i];
    sii += x * x;
    sis += x * series[i];
  }
  const double nd = static_cast<double>(n);
  const double den = nd * sii - si * si;
  const double slope = den != 0.0 ? (nd * sis - si * ss) / den : 0.0;
  const double icpt = (ss - slope * si) / nd;
  std::vector<double> z(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) z[i] = series[i] - (icpt + slope * static_cast<double>(i));

  // Pearson correlation between z[0, n-L) and z[L, n).
  const auto corr = [&](long lag) {
    const long m = n - lag;
    if (m < 2) return 0.0;
    double ma = 0, mb = 0;
    for (long i = 0; i < m; ++i) {
      ma += z[i];
      mb += z[i + lag];
    }
    ma /= static_cast<double>(m);
    mb /= static_cast<double>(m);
    double ab = 0, aa = 0, bb = 0;
    for (long i = 0; i < m; ++i) {
      const double a = z[i] - ma, b = z[i + lag] - mb;
      ab += a * b;
      aa += a * a;
      bb += b * b;
    }
    if (aa <= 0.0 || bb <= 0.0) return 0.0;
    return ab / std::sqrt(aa * bb);
  };

  std::vector<double> r(static_cast<std::size_t>(max_period + 2));
  r[0] = 1.0;
  for (long lag = 1; lag <= max_period + 1; ++lag) r[lag] = corr(lag);

  std::vector<PeriodScore> peaks;
  for (long lag = 1; lag <= max_period; ++lag) {
    if (r[lag] < kPeriodPeakThreshold) continue;
    if (r[lag] >= r[lag - 1] && r[lag] >= r[lag + 1]) peaks.push_back({lag, r[lag]});
  }
  // Scores equal to 1e-9 rank by the shorter period.
  std::stable_sort(peaks.begin(), peaks.end(), [](const PeriodScore& a, const PeriodScore& b) {
    const double qa = std::round(a.score * 1e9), qb = std::round(b.score * 1e9);
    if (qa != qb) return qa > qb;
    return a.period < b.period;
  });
  return peaks;
}

}  // namespace eqw
