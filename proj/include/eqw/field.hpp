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
#include <cstdint>
#include <string>
#include <vector>

namespace eqw {

// Electric phase per step and per lattice site: either 2*pi*q/p exactly or a
// real number of radians.
class FieldPhase {
 public:
  enum class Kind { Rational, Real };

  FieldPhase() = default;  // zero field, stored as 0/1

  // Reduces q/p; p must be nonzero.
  static FieldPhase rational(std::int64_t q, std::int64_t p);
  static FieldPhase real(double radians);

  Kind kind() const { return kind_; }
  std::int64_t q() const { return q_; }
  std::int64_t p() const { return p_; }
  double radians() const;
  bool is_zero() const;

  // "2pi*q/p" for rational phases, a 17-digit decimal otherwise.
  std::string to_string() const;

  FieldPhase negated() const;

  friend bool operator==(const FieldPhase&, const FieldPhase&) = default;

 private:
  Kind kind_ = Kind::Rational;
  std::int64_t q_ = 0;
  std::int64_t p_ = 1;
  double value_ = 0.0;
};

// exp(i*phi*x) for every x in [first, first + count). Rational phases are read
// from the table of p-th roots of unity at index (q*x mod p), so long runs
// never accumulate phase error.
std::vector<std::complex<double>> phase_factors(const FieldPhase& phi, long first, long count);

}  // namespace eqw
