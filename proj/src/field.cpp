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

#include "eqw/field.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "eqw/error.hpp"

namespace eqw {

FieldPhase FieldPhase::rational(std::int64_t q, std::int64_t p) {
  if (p == 0) fail(ErrorCode::InvalidArgument, "field phase denominator must be nonzero");
  if (p < 0) {
    q = -q;
    p = -p;
  }
  const std::int64_t g = std::gcd(q < 0 ? -q : q, p);
  FieldPhase f;
  f.kind_ = Kind::Rational;
  f.q_ = q / g;
  f.p_ = p / g;
  return f;
}

FieldPhase FieldPhase::real(double radians) {
  if (!std::isfinite(radians)) fail(ErrorCode::InvalidArgument, "field phase must be finite");
  FieldPhase f;
  f.kind_ = Kind::Real;
  f.value_ = radians;
  return f;
}

double FieldPhase::radians() const {
  if (kind_ == Kind::Real) return value_;
  return 2.0 * std::numbers::pi * static_cast<double>(q_) / static_cast<double>(p_);
}

bool FieldPhase::is_zero() const {
  return kind_ == Kind::Rational ? q_ == 0 : value_ == 0.0;
}

std::string FieldPhase::to_string() const {
  if (kind_ == Kind::Rational) return "2pi*" + std::to_string(q_) + "/" + std::to_string(p_);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value_, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

FieldPhase FieldPhase::negated() const {
  return kind_ == Kind::Rational ? rational(-q_, p_) : real(-value_);
}

std::vector<std::complex<double>> phase_factors(const FieldPhase& phi, long first, long count) {
  std::vector<std::complex<double>> out(static_cast<std::size_t>(count));
  if (phi.kind() == FieldPhase::Kind::Real) {
    for (long i = 0; i < count; ++i)
      out[i] = std::polar(1.0, phi.radians() * static_cast<double>(first + i));
    return out;
  }
  const std::int64_t p = phi.p();
  const auto index_of = [&](long x) {
    auto idx = static_cast<std::int64_t>(static_cast<__int128>(phi.q() % p) * (x % p) % p);
    return idx < 0 ? idx + p : idx;
  };
  const auto angle_of = [p](std::int64_t idx) {
    return 2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(p);
  };
  if (p > count) {
    for (long i = 0; i < count; ++i) out[i] = std::polar(1.0, angle_of(index_of(first + i)));
    return out;
  }
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(p));
  for (std::int64_t j = 0; j < p; ++j) roots[j] = std::polar(1.0, angle_of(j));
  for (long i = 0; i < count; ++i) out[i] = roots[index_of(first + i)];
  return out;
}

}  // namespace eqw
