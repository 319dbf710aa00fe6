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

#include "tdl/cohomology/cochain.hpp"
#include "tdl/error.hpp"
#include "tdl/exactnum/cyclotomic.hpp"
#include "tdl/exactnum/field_linalg.hpp"
#include "tdl/exactnum/int_matrix.hpp"
#include "tdl/groups/finite_group.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tdl {

using Vector = std::vector<Cyclotomic>;

/// Finite-dimensional algebra given by structure constants e_i e_j = sum_k c(i,j,k) e_k, a unit vector and a
/// counit covector. Axioms are not enforced here; validate_algebra reports on them.
class Algebra {
 public:
  struct Term {
    std::size_t k;
    Cyclotomic value;
  };

  Algebra(std::vector<std::string> basis, std::vector<Cyclotomic> constants, Vector unit, Vector counit)
      : basis_(std::move(basis)), constants_(std::move(constants)), unit_(std::move(unit)), counit_(std::move(counit)) {
    const std::size_t d = basis_.size();
    if (d == 0) throw DomainError("algebra needs a nonempty basis");
    if (constants_.size() != d * d * d) throw DomainError("structure constant table has the wrong size");
    if (unit_.size() != d || counit_.size() != d) throw DomainError("unit or counit has the wrong length");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (basis_[i] == basis_[j]) throw DomainError("duplicate basis name '" + basis_[i] + "'");
    terms_.resize(d * d);
    for (std::size_t ij = 0; ij < d * d; ++ij)
      for (std::size_t k = 0; k < d; ++k)
        if (!constants_[ij * d + k].is_zero()) terms_[ij].push_back({k, constants_[ij * d + k]});
  }

  /// The one-dimensional algebra with counit value eps.
  static Algebra trivial(const Cyclotomic& eps = Cyclotomic(1)) { return Algebra({"1"}, {Cyclotomic(1)}, {Cyclotomic(1)}, {eps}); }

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const Cyclotomic& c(std::size_t i, std::size_t j, std::size_t k) const { return constants_[(i * dim() + j) * dim() + k]; }
  const std::vector<Cyclotomic>& constants() const noexcept { return constants_; }
  const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return terms_[i * dim() + j]; }
  const Vector& unit() const noexcept { return unit_; }
  const Vector& counit() const noexcept { return counit_; }

  /// Smallest conductor in which all data lives.
  std::uint32_t conductor() const {
    std::uint64_t n = 1;
    auto take = [&](const Cyclotomic& x) { n = std::lcm(n, std::uint64_t{x.minimized().conductor()}); };
    for (const auto& x : constants_) take(x);
    for (const auto& x : unit_) take(x);
    for (const auto& x : counit_) take(x);
    return static_cast<std::uint32_t>(n);
  }

  Vector basis_vector(std::size_t i) const {
    Vector v(dim());
    v.at(i) = Cyclotomic(1);
    return v;
  }

  Vector multiply(const Vector& a, const Vector& b) const {
    Vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j].is_zero()) continue;
        const Cyclotomic ab = a[i] * b[j];
        for (const auto& t : terms(i, j)) out[t.k] += ab * t.value;
      }
    }
    return out;
  }

  Cyclotomic apply_counit(const Vector& a) const {
    Cyclotomic acc;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!a[i].is_zero()) acc += a[i] * counit_[i];
    return acc;
  }

  /// kappa(i, j) = counit(e_i e_j).
  Matrix<Cyclotomic> pairing() const {
    Matrix<Cyclotomic> k(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& t : terms(i, j)) k(i, j) += t.value * counit_[t.k];
    return k;
  }

  /// Same multiplication and unit, different counit.
  Algebra with_counit(Vector counit) const { return Algebra(basis_, constants_, unit_, std::move(counit)); }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.basis_ == b.basis_ && a.constants_ == b.constants_ && a.unit_ == b.unit_ && a.counit_ == b.counit_;
  }

 private:
  std::vector<std::string> basis_;
  std::vector<Cyclotomic> constants_;
  Vector unit_;
  Vector counit_;
  std::vector<std::vector<Term>> terms_;
};

struct AlgebraReport {
  bool associative = false;
  bool unital = false;
  bool symmetric = false;
  bool frobenius_nondegenerate = false;
  bool special = false;
  /// m o Delta = beta * id, when m o Delta is a scalar multiple of the identity.
  std::optional<Cyclotomic> beta;
  std::vector<std::string> problems;

  bool special_symmetric_frobenius() const noexcept {
    return associative && unital && symmetric && frobenius_nondegenerate && special;
  }
};

namespace detail {

inline bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vector subtract(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace detail

/// Inverse of the Frobenius pairing; throws if the pairing is degenerate.
inline Matrix<Cyclotomic> copairing(const Algebra& a) {
  try {
    return inverse(a.pairing());
  } catch (const DomainError&) {
    throw DomainError("Frobenius pairing is degenerate");
  }
}

/// Delta(e_k) = sum_{i,j} delta[(k*d + i)*d + j] e_i (x) e_j, dual to m under the pairing:
/// Delta(a) = sum_{x,y} K^{xy} (a e_x) (x) e_y with K the inverse pairing.
inline std::vector<Cyclotomic> comultiplication(const Algebra& a) {
  const std::size_t d = a.dim();
  const auto kinv = copairing(a);
  std::vector<Cyclotomic> delta(d * d * d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t x = 0; x < d; ++x)
      for (const auto& t : a.terms(k, x))
        for (std::size_t y = 0; y < d; ++y)
          if (!kinv(x, y).is_zero()) delta[(k * d + t.k) * d + y] += t.value * kinv(x, y);
  return delta;
}

/// Exhaustive check of the algebra axioms and the special symmetric Frobenius conditions.
inline AlgebraReport validate_algebra(const Algebra& a) {
  AlgebraReport rep;
  const std::size_t d = a.dim();
  auto name = [&](std::size_t i) { return a.basis()[i]; };

  rep.associative = true;
  std::vector<Vector> e(d);
  for (std::size_t i = 0; i < d; ++i) e[i] = a.basis_vector(i);
  for (std::size_t i = 0; i < d && rep.associative; ++i)
    for (std::size_t j = 0; j < d && rep.associative; ++j) {
      const Vector ij = a.multiply(e[i], e[j]);
      for (std::size_t k = 0; k < d; ++k) {
        if (a.multiply(ij, e[k]) != a.multiply(e[i], a.multiply(e[j], e[k]))) {
          rep.associative = false;
          rep.problems.push_back("associativity fails on (" + name(i) + ", " + name(j) + ", " + name(k) + ")");
          break;
        }
      }
    }

  rep.unital = true;
  for (std::size_t i = 0; i < d; ++i)
    if (a.multiply(a.unit(), e[i]) != e[i] || a.multiply(e[i], a.unit()) != e[i]) {
      rep.unital = false;
      rep.problems.push_back("unit does not act as identity on " + name(i));
      break;
    }

  const auto kappa = a.pairing();
  rep.symmetric = true;
  for (std::size_t i = 0; i < d && rep.symmetric; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (kappa(i, j) != kappa(j, i)) {
        rep.symmetric = false;
        rep.problems.push_back("pairing is not symmetric on (" + name(i) + ", " + name(j) + ")");
        break;
      }

  rep.frobenius_nondegenerate = !determinant(kappa).is_zero();
  if (!rep.frobenius_nondegenerate) {
    rep.problems.push_back("Frobenius pairing is degenerate");
    return rep;
  }

  // m o Delta (e_k) = sum_{x,y} K^{xy} e_k e_x e_y, so it is beta * id iff that window element is beta * 1.
  const auto kinv = inverse(kappa);
  std::vector<Vector> images(d);
  for (std::size_t k = 0; k < d; ++k) {
    Vector acc(d);
    for (std::size_t x = 0; x < d; ++x) {
      const Vector kx = a.multiply(e[k], e[x]);
      for (std::size_t y = 0; y < d; ++y) {
        if (kinv(x, y).is_zero()) continue;
        const Vector kxy = a.multiply(kx, e[y]);
        for (std::size_t i = 0; i < d; ++i)
          if (!kxy[i].is_zero()) acc[i] += kinv(x, y) * kxy[i];
      }
    }
    images[k] = std::move(acc);
  }
  std::optional<Cyclotomic> beta;
  bool scalar = true;
  for (std::size_t k = 0; k < d && scalar; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      if (i == k) continue;
      if (!images[k][i].is_zero()) scalar = false;
    }
    if (!beta) beta = images[k][k];
    else if (*beta != images[k][k]) scalar = false;
  }
  if (scalar) rep.beta = beta;
  rep.special = scalar && beta && !beta->is_zero();
  if (!rep.special) rep.problems.push_back("m o Delta is not a nonzero multiple of the identity");
  return rep;
}

/// dim of { z : z a = a z for all a }.
inline std::size_t center_dim(const Algebra& a) {
  const std::size_t d = a.dim();
  Matrix<Cyclotomic> m(d * d, d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& t : a.terms(j, x)) m(x * d + t.k, j) += t.value;
      for (const auto& t : a.terms(x, j)) m(x * d + t.k, j) -= t.value;
    }
  return nullity(m);
}

/// Basis e_g, e_g e_h = exp(2 pi i phi(g,h)) e_{gh}, unit e_1, counit |H| delta_{g,1}.
inline Algebra twisted_group_algebra(const GroupPtr& h, const Cochain& phi) {
  if (phi.degree() != 2 || !(phi.group() == h || *phi.group() == *h))
    throw DomainError("twisting cochain must be a 2-cochain on the same group");
  const std::size_t n = h->order();
  std::vector<Cyclotomic> c(n * n * n);
  const auto m = static_cast<std::uint32_t>(phi.modulus());
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k = 0; k < n; ++k)
      c[(g * n + k) * n + h->mul(g, k)] = Cyclotomic::root_of_unity(m, static_cast<std::int64_t>(phi.residue(g * n + k)));
  Vector unit(n), counit(n);
  unit[h->identity()] = Cyclotomic(1);
  counit[h->identity()] = Cyclotomic(static_cast<int>(n));
  return Algebra(h->names(), std::move(c), std::move(unit), std::move(counit));
}

inline Algebra group_algebra(const GroupPtr& h) { return twisted_group_algebra(h, Cochain(h, 2)); }

/// A (+) B with the block-diagonal product and counit.
inline Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::string> names;
  for (const auto& s : a.basis()) names.push_back(s + "+0");
  for (const auto& s : b.basis()) names.push_back("0+" + s);
  std::vector<Cyclotomic> c(d * d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (const auto& t : a.terms(i, j)) c[(i * d + j) * d + t.k] = t.value;
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (const auto& t : b.terms(i, j)) c[((da + i) * d + da + j) * d + da + t.k] = t.value;
  Vector unit(a.unit()), counit(a.counit());
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  counit.insert(counit.end(), b.counit().begin(), b.counit().end());
  return Algebra(std::move(names), std::move(c), std::move(unit), std::move(counit));
}

/// Q = A (x) B (x) A with (a1 b1 a2)(a3 b2 a4) = kappa_A(a2, a3) a1 (x) b1 b2 (x) a4.
/// Unit: the inverse pairing of A with B's unit in the middle. Counit: kappa_A(a2, a1) eps_B(b), the trace on the
/// A (x) A factor, which makes the specialness constant dim(A) * beta_B.
inline Algebra sandwich(const Algebra& a, const Algebra& b) {
  for (const auto* x : {&a, &b})
    if (!validate_algebra(*x).special_symmetric_frobenius())
      throw DomainError("sandwich needs special symmetric Frobenius algebras");
  const std::size_t da = a.dim(), db = b.dim(), d = da * db * da;
  auto idx = [&](std::size_t x, std::size_t y, std::size_t z) { return (x * db + y) * da + z; };
  const auto kappa = a.pairing();
  const auto kinv = inverse(kappa);
  std::vector<std::string> names(d);
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t y = 0; y < db; ++y)
      for (std::size_t z = 0; z < da; ++z) names[idx(x, y, z)] = a.basis()[x] + "|" + b.basis()[y] + "|" + a.basis()[z];
  std::vector<Cyclotomic> c(d * d * d);
  for (std::size_t x1 = 0; x1 < da; ++x1)
    for (std::size_t z1 = 0; z1 < da; ++z1)
      for (std::size_t x2 = 0; x2 < da; ++x2) {
        const Cyclotomic& k = kappa(z1, x2);
        if (k.is_zero()) continue;
        for (std::size_t z2 = 0; z2 < da; ++z2)
          for (std::size_t y1 = 0; y1 < db; ++y1)
            for (std::size_t y2 = 0; y2 < db; ++y2)
              for (const auto& t : b.terms(y1, y2))
                c[(idx(x1, y1, z1) * d + idx(x2, y2, z2)) * d + idx(x1, t.k, z2)] = k * t.value;
      }
  Vector unit(d), counit(d);
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t z = 0; z < da; ++z)
      for (std::size_t y = 0; y < db; ++y) {
        if (!kinv(x, z).is_zero() && !b.unit()[y].is_zero()) unit[idx(x, y, z)] = kinv(x, z) * b.unit()[y];
        if (!kappa(z, x).is_zero() && !b.counit()[y].is_zero()) counit[idx(x, y, z)] = kappa(z, x) * b.counit()[y];
      }
  return Algebra(std::move(names), std::move(c), std::move(unit), std::move(counit));
}

}  // namespace tdl
