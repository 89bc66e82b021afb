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

#include <cstdint>
#include <vector>

#include "eqw/field.hpp"

namespace eqw {

// Remainders below this are treated as a terminated expansion, so 0.333333333333
// (twelve digits) resolves to 1/3.
inline constexpr double kContinuedFractionCutoff = 1e-12;

struct CFExpansion {
  std::vector<std::int64_t> terms;  // a0 >= 0, ai >= 1 for i >= 1
  bool exact = false;
};

struct Fraction {
  std::int64_t q = 0;
  std::int64_t p = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Continued fraction of x in [0, 1), at most max_terms terms.
CFExpansion expand(double x, int max_terms);

// Value of the first depth terms as a reduced fraction; 1 <= depth <= size.
Fraction convergent(const CFExpansion& cf, int depth);

// Smallest-denominator convergent of phi / 2pi within tolerance (measured on
// phi / 2pi). Negative phases keep their sign in q.
FieldPhase phase_to_rational(double phi, double tolerance);

}  // namespace eqw
