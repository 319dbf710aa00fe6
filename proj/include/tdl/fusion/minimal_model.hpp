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
#include "tdl/exactnum/cyclotomic.hpp"
#include "tdl/exactnum/int_matrix.hpp"
#include "tdl/fusion/ring.hpp"

#include <array>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tdl {

/// Modular S-matrix over the cyclotomics, rows and columns indexed by ring labels.
class SMatrix {
 public:
  SMatrix(Matrix<Cyclotomic> s, FusionRing::Label unit) : s_(std::move(s)), unit_(unit) {
    if (s_.rows() != s_.cols()) throw DomainError("S-matrix must be square");
    if (unit_ >= s_.rows()) throw DomainError("S-matrix unit out of range");
  }
  std::size_t size() const noexcept { return s_.rows(); }
  FusionRing::Label unit() const noexcept { return unit_; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return s_(i, j); }
  const Matrix<Cyclotomic>& matrix() const noexcept { return s_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (s_(i, j) != s_(j, i)) return false;
    return true;
  }

  /// S * conj(S)^T == 1.
  bool is_unitary() const {
    const std::size_t n = size();
    std::vector<Cyclotomic> conj(n * n);
    for (std::size_t i = 0; i < n * n; ++i) conj[i] = s_(i / n, i % n).conj();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Cyclotomic acc;
        for (std::size_t k = 0; k < n; ++k) acc += s_(i, k) * conj[j * n + k];
        if (acc != Cyclotomic(i == j ? 1 : 0)) return false;
      }
    return true;
  }

 private:
  Matrix<Cyclotomic> s_;
  FusionRing::Label unit_;
};

/// A Verlinde failure: the ring's N_{ij}^k disagrees with the value computed from S.
struct VerlindeMismatch {
  std::array<FusionRing::Label, 3> where{};
  std::string message;
};

/// N_{ij}^k = sum_m S_im S_jm conj(S_km) / S_1m for one triple.
inline Cyclotomic verlinde_coefficient(const SMatrix& s, std::size_t i, std::size_t j, std::size_t k) {
  Cyclotomic acc;
  for (std::size_t m = 0; m < s.size(); ++m) acc += s(i, m) * s(j, m) * s(k, m).conj() / s(s.unit(), m);
  return acc;
}

/// Checks that S is unitary with nonzero unit row and diagonalizes fusion as N_i S = S diag(S_i / S_1).
inline std::optional<VerlindeMismatch> check_verlinde(const FusionRing& r, const SMatrix& s) {
  const std::size_t n = r.rank();
  if (s.size() != n) return VerlindeMismatch{{0, 0, 0}, "S-matrix size does not match the ring"};
  if (s.unit() != r.unit()) return VerlindeMismatch{{0, 0, 0}, "S-matrix and ring disagree on the unit"};
  for (std::size_t m = 0; m < n; ++m)
    if (s(s.unit(), m).is_zero()) return VerlindeMismatch{{s.unit(), m, 0}, "S-matrix unit row has a zero entry"};
  if (!s.is_unitary()) return VerlindeMismatch{{0, 0, 0}, "S-matrix is not unitary"};
  std::vector<Cyclotomic> inv_unit_row(n);
  for (std::size_t m = 0; m < n; ++m) inv_unit_row[m] = s(s.unit(), m).inverse();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Cyclotomic> lambda(n);
    for (std::size_t m = 0; m < n; ++m) lambda[m] = s(i, m) * inv_unit_row[m];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Cyclotomic lhs;
        for (std::size_t k = 0; k < n; ++k)
          if (std::size_t c = r.n(i, j, k)) lhs += Cyclotomic(static_cast<int>(c)) * s(k, m);
        if (lhs == s(j, m) * lambda[m]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          const Cyclotomic v = verlinde_coefficient(s, i, j, k);
          if (v != Cyclotomic(static_cast<int>(r.n(i, j, k))))
            return VerlindeMismatch{{i, j, k}, "Verlinde formula disagrees with N(" + r.label(i) + ", " + r.label(j) +
                                                   " -> " + r.label(k) + ") = " + std::to_string(r.n(i, j, k))};
        }
        return VerlindeMismatch{{i, j, 0}, "S-matrix does not diagonalize fusion with " + r.label(i)};
      }
  }
  return std::nullopt;
}

/// Diagonal action of a defect on the primary labels.
struct DefectOperator {
  FusionRing::Label label = 0;
  std::vector<Cyclotomic> eigenvalues;

  const Cyclotomic& eigenvalue(std::size_t i) const { return eigenvalues.at(i); }

  /// Eigenvalue-wise product; the label of a composite is not a single label, so it is left as the left factor's.
  friend DefectOperator operator*(const DefectOperator& a, const DefectOperator& b) {
    if (a.eigenvalues.size() != b.eigenvalues.size()) throw DomainError("defect operators on different spaces");
    DefectOperator out{a.label, a.eigenvalues};
    for (std::size_t i = 0; i < out.eigenvalues.size(); ++i) out.eigenvalues[i] *= b.eigenvalues[i];
    return out;
  }
};

/// D_x for every label, eigenvalue on label i being S_{x,i} / S_{1,i}.
inline std::vector<DefectOperator> defect_operators(const FusionRing& r, const SMatrix& s) {
  if (auto bad = check_verlinde(r, s)) throw DomainError(bad->message);
  const std::size_t n = r.rank();
  std::vector<Cyclotomic> inv_unit_row(n);
  for (std::size_t m = 0; m < n; ++m) inv_unit_row[m] = s(s.unit(), m).inverse();
  std::vector<DefectOperator> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    out[x].label = x;
    for (std::size_t m = 0; m < n; ++m) out[x].eigenvalues.push_back(s(x, m) * inv_unit_row[m]);
  }
  return out;
}

inline DefectOperator defect_operator(const FusionRing& r, const SMatrix& s, FusionRing::Label x) {
  r.check_label(x);
  return defect_operators(r, s)[x];
}

/// Virasoro minimal model M(p, p') with p > p' >= 2.
struct MinimalModel {
  int p = 0, p_prime = 0;
  FusionRing ring;
  SMatrix s;
  std::vector<std::pair<int, int>> kac;  ///< (r, s) representative of each label
  std::vector<Rational> weights;         ///< conformal weight h_{r,s}
  Rational central_charge;
};

namespace detail {

/// BPZ truncated interval: |a-b|+1 .. min(a+b-1, 2m-a-b-1) in steps of 2.
inline std::vector<int> truncated_interval(int a, int b, int m) {
  std::vector<int> out;
  for (int c = std::abs(a - b) + 1; c <= std::min(a + b - 1, 2 * m - a - b - 1); c += 2) out.push_back(c);
  return out;
}

/// x - 1/x for x = exp(i pi k / m).
inline Cyclotomic sine_factor(long long k, int m) {
  const auto conductor = static_cast<std::uint32_t>(2 * m);
  return Cyclotomic::root_of_unity(conductor, k) - Cyclotomic::root_of_unity(conductor, -k);
}

}  // namespace detail

/// Labels are Kac pairs (r, s), 1 <= r < p', 1 <= s < p, identified under (r, s) ~ (p'-r, p-s) and named "(r,s)"
/// by the lexicographically smaller representative. Fusion follows the doubly truncated BPZ rule, and
/// S_{(r,s),(rho,sigma)} = 2 sqrt(2/(p p')) (-1)^{1+s rho+r sigma} sin(pi p r rho/p') sin(pi p' s sigma/p), exactly,
/// with the overall sign chosen so that S_{1,1} > 0.
inline MinimalModel minimal_model(int p, int p_prime) {
  if (p_prime < 2 || p <= p_prime) throw DomainError("minimal model needs p > p' >= 2");
  if (std::gcd(p, p_prime) != 1) throw DomainError("minimal model needs coprime p and p'");
  if (static_cast<long long>(p) * p_prime > 2000) throw SizeError("minimal model too large");
  auto canonical = [&](int r, int s) {
    std::pair<int, int> a{r, s}, b{p_prime - r, p - s};
    return std::min(a, b);
  };
  std::vector<std::pair<int, int>> kac;
  std::map<std::pair<int, int>, std::size_t> index;
  for (int r = 1; r < p_prime; ++r)
    for (int s = 1; s < p; ++s) {
      auto c = canonical(r, s);
      if (!index.count(c)) {
        index[c] = kac.size();
        kac.push_back(c);
      }
    }
  const std::size_t n = kac.size();
  std::vector<std::string> labels;
  std::vector<FusionRing::Label> dual(n);
  std::vector<std::size_t> table(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("(" + std::to_string(kac[i].first) + "," + std::to_string(kac[i].second) + ")");
    dual[i] = i;
    for (std::size_t j = 0; j < n; ++j)
      for (int r3 : detail::truncated_interval(kac[i].first, kac[j].first, p_prime))
        for (int s3 : detail::truncated_interval(kac[i].second, kac[j].second, p))
          table[(i * n + j) * n + index.at(canonical(r3, s3))] += 1;
  }
  const std::size_t unit = index.at({1, 1});
  FusionRing ring(std::move(labels), unit, std::move(dual), std::move(table));

  const long long pp = static_cast<long long>(p) * p_prime;
  // 2 sqrt(2/(pp')) * (-1/4) = -sqrt(2pp') / (2pp')
  const Cyclotomic prefactor = sqrt_integer(static_cast<std::uint64_t>(2 * pp)) * Cyclotomic(Rational(-1, 2 * pp));
  Matrix<Cyclotomic> s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto [r, sg] = kac[i];
      const auto [rho, sigma] = kac[j];
      const long long parity = 1LL + static_cast<long long>(sg) * rho + static_cast<long long>(r) * sigma;
      Cyclotomic v = prefactor * detail::sine_factor(static_cast<long long>(p) * r * rho, p_prime) *
                     detail::sine_factor(static_cast<long long>(p_prime) * sg * sigma, p);
      s(i, j) = parity % 2 == 0 ? v : -v;
    }
  if (s(unit, unit).to_complex().real() < 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = -s(i, j);

  std::vector<Rational> weights;
  for (const auto& [r, sg] : kac) {
    const long long a = static_cast<long long>(p) * r - static_cast<long long>(p_prime) * sg;
    const long long d = p - p_prime;
    weights.emplace_back(a * a - d * d, 4 * pp);
  }
  const long long d = p - p_prime;
  return MinimalModel{p, p_prime, std::move(ring), SMatrix(std::move(s), unit), std::move(kac), std::move(weights),
                      Rational(1) - Rational(6 * d * d, pp)};
}

}  // namespace tdl
