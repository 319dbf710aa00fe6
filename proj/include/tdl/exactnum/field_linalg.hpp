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
#include "tdl/exactnum/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace tdl {

/// Gaussian elimination over an exact field (Rational, Cyclotomic).
template <class F>
struct RowEchelon {
  Matrix<F> reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivot_cols;  ///< one per nonzero row
  F determinant_factor = F(1);          ///< det(M) when M is square and full rank
};

namespace detail {

template <class F>
bool field_is_zero(const F& x) {
  if constexpr (requires { x.is_zero(); })
    return x.is_zero();
  else
    return x == 0;
}

}  // namespace detail

template <class F>
RowEchelon<F> row_echelon(Matrix<F> m) {
  RowEchelon<F> out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  F det(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && detail::field_is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.swap_rows(p, r);
      det = -det;
    }
    const F pivot = m(r, c);
    det *= pivot;
    const F inv = F(1) / pivot;
    for (std::size_t j = c; j < cols; ++j)
      if (!detail::field_is_zero(m(r, j))) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || detail::field_is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!detail::field_is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  out.determinant_factor = det;
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_echelon(m).pivot_cols.size();
}

template <class F>
F determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  auto e = row_echelon(m);
  if (e.pivot_cols.size() < m.rows()) return F(0);
  return e.determinant_factor;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto e = row_echelon(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Dimension of {x : M x = 0}.
template <class F>
std::size_t nullity(const Matrix<F>& m) {
  return m.cols() - rank(m);
}

}  // namespace tdl
