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

#include "tdl/error.hpp"
#include "tdl/exactnum/rational.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdl {

namespace detail {

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first. Cached.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<std::int64_t> quotient(poly.size() - dd, 0);
    for (std::size_t k = poly.size(); k-- > dd;) {
      std::int64_t t = poly[k];  // divisor is monic
      quotient[k - dd] = t;
      if (t == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[k - dd + j] -= t * divisor[j];
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace detail

/// An element of the cyclotomic field Q(z), z = exp(2 pi i / N).
///
/// Stored in the power basis 1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic
/// polynomial, as integer numerators over one positive common denominator with
/// gcd 1. Trailing zero coefficients are trimmed, so zero has no coefficients.
/// Elements of different conductors combine in the lcm conductor.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value) {                     // NOLINT(google-explicit-constructor)
    if (value != 0) {
      num_.push_back(tdl::numerator(value));
      den_ = tdl::denominator(value);
    }
  }

  /// z_N^k.
  static Cyclotomic root_of_unity(std::uint32_t conductor, std::int64_t k = 1) {
    std::map<std::int64_t, Rational> terms;
    terms[k] = 1;
    return from_exponents(conductor, terms);
  }

  /// Sum of c_k z_N^k for arbitrary (also negative or >= N) exponents k.
  static Cyclotomic from_exponents(std::uint32_t conductor, const std::map<std::int64_t, Rational>& terms) {
    if (conductor == 0) throw DomainError("cyclotomic conductor must be positive");
    BigInt den = 1;
    for (const auto& [k, c] : terms) den = tdl::lcm(den, tdl::denominator(c));
    std::vector<BigInt> coeffs(conductor, 0);
    const auto n = static_cast<std::int64_t>(conductor);
    for (const auto& [k, c] : terms) {
      std::int64_t e = ((k % n) + n) % n;
      coeffs[e] += tdl::numerator(c) * (den / tdl::denominator(c));
    }
    Cyclotomic out;
    out.conductor_ = conductor;
    out.num_ = std::move(coeffs);
    out.den_ = std::move(den);
    out.reduce();
    return out;
  }

  std::uint32_t conductor() const noexcept { return conductor_; }
  const BigInt& denominator() const noexcept { return den_; }
  const std::vector<BigInt>& numerators() const noexcept { return num_; }

  /// Coefficient of z^k in the canonical basis (zero past the stored length).
  Rational coefficient(std::size_t k) const {
    if (k >= num_.size()) return 0;
    return Rational(num_[k], den_);
  }

  bool is_zero() const noexcept { return num_.empty(); }
  bool is_rational() const noexcept { return num_.size() <= 1; }
  Rational rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic value is not rational");
    return coefficient(0);
  }

  /// The same element expressed in conductor `m`, which must be a multiple of conductor().
  Cyclotomic lifted(std::uint32_t m) const {
    if (m == conductor_) return *this;
    if (m == 0 || m % conductor_ != 0) throw DomainError("cannot lift cyclotomic to a non-multiple conductor");
    if (is_zero()) {
      Cyclotomic z;
      z.conductor_ = m;
      return z;
    }
    const std::uint32_t step = m / conductor_;
    Cyclotomic out;
    out.conductor_ = m;
    out.den_ = den_;
    out.num_.assign(static_cast<std::size_t>(step) * (num_.size() - 1) + 1, 0);
    for (std::size_t k = 0; k < num_.size(); ++k) out.num_[k * step] = num_[k];
    out.reduce();
    return out;
  }

  /// Image under the Galois automorphism z -> z^a, gcd(a, N) = 1.
  Cyclotomic galois(std::int64_t a) const {
    const auto n = static_cast<std::int64_t>(conductor_);
    a = ((a % n) + n) % n;
    if (std::gcd(a, n) != 1 && n > 1) throw DomainError("galois exponent not coprime to conductor");
    if (is_zero() || n == 1) return *this;
    Cyclotomic out;
    out.conductor_ = conductor_;
    out.den_ = den_;
    out.num_.assign(conductor_, 0);
    for (std::size_t k = 0; k < num_.size(); ++k) out.num_[(static_cast<std::int64_t>(k) * a) % n] += num_[k];
    out.reduce();
    return out;
  }

  /// Complex conjugate.
  Cyclotomic conj() const { return galois(static_cast<std::int64_t>(conductor_) - 1); }

  Cyclotomic inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Cyclotomic(Rational(1) / rational_value());
    // x * prod_{a != 1} sigma_a(x) is the norm, a nonzero rational.
    Cyclotomic others(1);
    for (std::uint32_t a = 2; a < conductor_; ++a) {
      if (std::gcd(a, conductor_) != 1) continue;
      others *= galois(a);
    }
    Cyclotomic norm = *this * others;
    return others * Cyclotomic(Rational(1) / norm.rational_value());
  }

  /// The same element in the smallest conductor containing it.
  Cyclotomic minimized() const {
    if (is_rational()) return Cyclotomic(coefficient(0));
    for (std::uint32_t m = 2; m < conductor_; ++m) {
      if (conductor_ % m != 0) continue;
      if (auto sub = restrict_to(m)) return *sub;
    }
    return *this;
  }

  /// Numerical value; for display and sign decisions on values known to be nonzero.
  std::complex<long double> to_complex() const {
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    std::complex<long double> acc = 0;
    for (std::size_t k = 0; k < num_.size(); ++k) {
      if (num_[k] == 0) continue;
      long double angle = two_pi * static_cast<long double>(k) / conductor_;
      acc += static_cast<long double>(num_[k]) * std::complex<long double>(std::cos(angle), std::sin(angle));
    }
    return acc / static_cast<long double>(den_);
  }

  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.num_) c = -c;
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = add(*this, rhs, false); }
  Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = add(*this, rhs, true); }
  Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = multiply(*this, rhs); }
  Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this = multiply(*this, rhs.inverse()); }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b, false); }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b, true); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) { return multiply(a, b); }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return multiply(a, b.inverse()); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return a.den_ == b.den_ && a.num_ == b.num_;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(m) == b.lifted(m);
  }

  /// Structural identity: same conductor and same canonical coefficients.
  bool identical(const Cyclotomic& other) const {
    return conductor_ == other.conductor_ && den_ == other.den_ && num_ == other.num_;
  }

  /// Re-normalizes; a no-op on values produced by this class.
  Cyclotomic normalized() const {
    Cyclotomic out = *this;
    out.reduce();
    return out;
  }

 private:
  static Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b, bool subtract) {
    if (b.is_zero() && a.conductor_ % b.conductor_ == 0) return a;
    if (a.is_zero() && b.conductor_ % a.conductor_ == 0) return subtract ? -b : b;
    const std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
    if (a.conductor_ != m || b.conductor_ != m) return add(a.lifted(m), b.lifted(m), subtract);
    Cyclotomic out;
    out.conductor_ = m;
    const BigInt den = tdl::lcm(a.den_, b.den_);
    const BigInt fa = den / a.den_;
    const BigInt fb = den / b.den_;
    out.num_.assign(std::max(a.num_.size(), b.num_.size()), 0);
    for (std::size_t k = 0; k < a.num_.size(); ++k) out.num_[k] = a.num_[k] * fa;
    for (std::size_t k = 0; k < b.num_.size(); ++k) {
      if (subtract)
        out.num_[k] -= b.num_[k] * fb;
      else
        out.num_[k] += b.num_[k] * fb;
    }
    out.den_ = den;
    out.normalize();
    return out;
  }

  static Cyclotomic multiply(const Cyclotomic& a, const Cyclotomic& b) {
    const std::uint32_t m = std::lcm(a.conductor_, b.conductor_);
    if (a.is_zero() || b.is_zero()) {
      Cyclotomic z;
      z.conductor_ = m;
      return z;
    }
    if (a.conductor_ != m || b.conductor_ != m) return multiply(a.lifted(m), b.lifted(m));
    Cyclotomic out;
    out.conductor_ = m;
    out.num_.assign(a.num_.size() + b.num_.size() - 1, 0);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < b.num_.size(); ++j) {
        if (b.num_[j] == 0) continue;
        out.num_[i + j] += a.num_[i] * b.num_[j];
      }
    }
    out.den_ = a.den_ * b.den_;
    out.reduce();
    return out;
  }

  // Folds exponents modulo N, divides by Phi_N, then normalizes.
  void reduce() {
    const std::size_t n = conductor_;
    if (num_.size() > n) {
      for (std::size_t k = n; k < num_.size(); ++k) num_[k % n] += num_[k];
      num_.resize(n);
    }
    const auto& phi = detail::cyclotomic_polynomial(conductor_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = num_.size(); k-- > deg;) {
      if (num_[k] == 0) continue;
      const BigInt t = num_[k];
      for (std::size_t j = 0; j <= deg; ++j) {
        if (phi[j] != 0) num_[k - deg + j] -= t * phi[j];
      }
    }
    if (num_.size() > deg) num_.resize(deg);
    normalize();
  }

  void normalize() {
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
    if (num_.empty()) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    BigInt g = den_;
    for (const auto& c : num_) {
      if (g == 1) break;
      if (c != 0) g = tdl::gcd(g, c);
    }
    if (g != 1) {
      den_ /= g;
      for (auto& c : num_) c /= g;
    }
  }

  // The element as a member of Q(z_m), m | N, if it lies there.
  std::optional<Cyclotomic> restrict_to(std::uint32_t m) const;

  std::uint32_t conductor_ = 1;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

namespace detail {

/// Gaussian elimination over Q; solves M y = b. Returns nullopt if inconsistent.
inline std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> m,
                                                            std::vector<Rational> b) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> y(cols, 0);
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = b[i];
  return y;
}

}  // namespace detail

inline std::optional<Cyclotomic> Cyclotomic::restrict_to(std::uint32_t m) const {
  // Fixed by every sigma_a with a = 1 mod m iff the element lies in Q(z_m).
  for (std::uint32_t a = 1 + m; a < conductor_; a += m) {
    if (std::gcd(a, conductor_) != 1) continue;
    if (!(galois(a) == *this)) return std::nullopt;
  }
  const std::size_t sub_dim = detail::euler_phi(m);
  const std::size_t dim = detail::euler_phi(conductor_);
  const std::uint32_t step = conductor_ / m;
  std::vector<std::vector<Rational>> matrix(dim, std::vector<Rational>(sub_dim, 0));
  for (std::size_t k = 0; k < sub_dim; ++k) {
    Cyclotomic basis = root_of_unity(conductor_, static_cast<std::int64_t>(k * step));
    for (std::size_t row = 0; row < dim; ++row) matrix[row][k] = basis.coefficient(row);
  }
  std::vector<Rational> rhs(dim);
  for (std::size_t row = 0; row < dim; ++row) rhs[row] = coefficient(row);
  auto y = detail::solve_rational(std::move(matrix), std::move(rhs));
  if (!y) return std::nullopt;
  std::map<std::int64_t, Rational> terms;
  for (std::size_t k = 0; k < sub_dim; ++k)
    if ((*y)[k] != 0) terms[static_cast<std::int64_t>(k)] = (*y)[k];
  return from_exponents(m, terms);
}

/// Exact square root of a positive integer inside a cyclotomic field (quadratic Gauss sums).
inline Cyclotomic sqrt_integer(std::uint64_t n) {
  if (n == 0) return Cyclotomic();
  std::uint64_t square = 1, free = 1, rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      free *= p;
    }
  }
  free *= rest;
  Cyclotomic root(Rational(static_cast<long long>(square)));
  std::uint64_t f = free;
  for (std::uint64_t p = 2; f > 1; ++p) {
    if (f % p != 0) continue;
    f /= p;
    if (p == 2) {
      root *= Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
      continue;
    }
    // Gauss sum g = sum_a (a/p) z_p^a; g^2 = (-1)^((p-1)/2) p.
    std::map<std::int64_t, Rational> terms;
    for (std::uint64_t a = 1; a < p; ++a) {
      std::uint64_t e = 1, base = a % p, ex = (p - 1) / 2;
      while (ex > 0) {
        if (ex & 1) e = e * base % p;
        base = base * base % p;
        ex >>= 1;
      }
      terms[static_cast<std::int64_t>(a)] = (e == 1) ? 1 : -1;
    }
    Cyclotomic g = Cyclotomic::from_exponents(static_cast<std::uint32_t>(p), terms);
    if (p % 4 == 3) g *= -Cyclotomic::root_of_unity(4, 1);  // g = i sqrt(p)
    root *= g;
  }
  return root;
}

/// Conductor of Q(sqrt(n)) for a positive integer n (1 when n is a square).
inline std::uint32_t sqrt_conductor(std::uint64_t n) {
  std::uint64_t free = 1, rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) rest /= p * p;
    if (rest % p == 0) {
      rest /= p;
      free *= p;
    }
  }
  free *= rest;
  if (free == 1) return 1;
  return static_cast<std::uint32_t>(free % 4 == 1 ? free : 4 * free);
}

}  // namespace tdl
