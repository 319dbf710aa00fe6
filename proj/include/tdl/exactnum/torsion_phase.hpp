// Copyright 2026 The tdl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "tdl/exactnum/cyclotomic.hpp"
#include "tdl/exactnum/rational.hpp"

#include <string>

namespace tdl {

/// An element exp(2 pi i q) of the torsion of C^x, written additively as q in Q/Z.
/// The representative is kept in [0, 1).
class TorsionPhase {
 public:
  TorsionPhase() = default;
  TorsionPhase(const Rational& q) : value_(wrap(q)) {}  // NOLINT(google-explicit-constructor)
  TorsionPhase(long long p, long long q) : value_(wrap(Rational(p, q))) {}

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  /// Order in Q/Z, i.e. the reduced denominator.
  BigInt order() const { return tdl::denominator(value_); }

  TorsionPhase operator-() const { return TorsionPhase(-value_); }
  TorsionPhase& operator+=(const TorsionPhase& o) {
    value_ += o.value_;
    if (value_ >= 1) value_ -= 1;
    return *this;
  }
  TorsionPhase& operator-=(const TorsionPhase& o) {
    value_ -= o.value_;
    if (value_ < 0) value_ += 1;
    return *this;
  }
  friend TorsionPhase operator+(TorsionPhase a, const TorsionPhase& b) { return a += b; }
  friend TorsionPhase operator-(TorsionPhase a, const TorsionPhase& b) { return a -= b; }
  friend TorsionPhase operator*(long long k, const TorsionPhase& a) { return TorsionPhase(a.value_ * k); }
  friend bool operator==(const TorsionPhase&, const TorsionPhase&) = default;

 private:
  static Rational wrap(const Rational& q) {
    BigInt n = tdl::numerator(q), d = tdl::denominator(q);
    BigInt r = n % d;
    if (r < 0) r += d;
    return Rational(r, d);
  }

  Rational value_ = 0;
};

inline std::string to_string(const TorsionPhase& p) { return to_string(p.value()); }

/// exp(2 pi i k/N) as z_N^k, with k/N the reduced representative of `p`.
inline Cyclotomic phase_to_cyclotomic(const TorsionPhase& p) {
  const BigInt den = p.order();
  if (den > 100000) throw SizeError("phase denominator too large for cyclotomic embedding");
  const auto n = static_cast<std::uint32_t>(den);
  return Cyclotomic::root_of_unity(n, static_cast<std::int64_t>(tdl::numerator(p.value())));
}

}  // namespace tdl
