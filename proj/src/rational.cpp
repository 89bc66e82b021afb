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

#include "eqw/rational.hpp"

#include <cmath>
#include <numbers>

#include "eqw/error.hpp"

namespace eqw {

CFExpansion expand(double x, int max_terms) {
  if (!(x >= 0.0 && x < 1.0)) fail(ErrorCode::InvalidArgument, "expand needs 0 <= x < 1");
  if (max_terms < 1) fail(ErrorCode::InvalidArgument, "max_terms must be >= 1");
  CFExpansion cf;
  double r = x;
  while (static_cast<int>(cf.terms.size()) < max_terms) {
    double a = std::floor(r);
    double frac = r - a;
    if (frac > 1.0 - kContinuedFractionCutoff) {  // r sits just below an integer
      a += 1.0;
      frac = 0.0;
    }
    cf.terms.push_back(static_cast<std::int64_t>(a));
    if (frac < kContinuedFractionCutoff) {
      cf.exact = true;
      break;
    }
    r = 1.0 / frac;
  }
  return cf;
}

Fraction convergent(const CFExpansion& cf, int depth) {
  if (depth < 1 || depth > static_cast<int>(cf.terms.size()))
    fail(ErrorCode::InvalidArgument, "convergent depth out of range");
  // h_n = a_n h_{n-1} + h_{n-2}, k_n = a_n k_{n-1} + k_{n-2}
  std::int64_t h_prev = 1, h = cf.terms[0];
  std::int64_t k_prev = 0, k = 1;
  for (int i = 1; i < depth; ++i) {
    const std::int64_t a = cf.terms[i];
    std::int64_t h_next = 0, k_next = 0;
    if (__builtin_mul_overflow(a, h, &h_next) || __builtin_add_overflow(h_next, h_prev, &h_next) ||
        __builtin_mul_overflow(a, k, &k_next) || __builtin_add_overflow(k_next, k_prev, &k_next))
      fail(ErrorCode::Numerical, "continued-fraction convergent overflows 64 bits");
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return {h, k};
}

FieldPhase phase_to_rational(double phi, double tolerance) {
  if (!(tolerance > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (!std::isfinite(phi)) fail(ErrorCode::InvalidArgument, "phase must be finite");
  const double x = phi / (2.0 * std::numbers::pi);
  const double whole = std::floor(x);
  double frac = x - whole;
  if (frac >= 1.0) frac = 0.0;
  const CFExpansion cf = expand(frac, 64);
  Fraction best = convergent(cf, 1);
  for (int depth = 1; depth <= static_cast<int>(cf.terms.size()); ++depth) {
    Fraction f;
    try {
      f = convergent(cf, depth);
    } catch (const Error&) {
      break;
    }
    best = f;
    if (std::abs(static_cast<double>(f.q) / static_cast<double>(f.p) - frac) <= tolerance) break;
  }
  return FieldPhase::rational(best.q + static_cast<std::int64_t>(whole) * best.p, best.p);
}

}  // namespace eqw
