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

#include "tdl/exactnum/int_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tdl {

/// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
/// U or V are left empty (0x0) when not requested.
template <class T>
struct SmithForm {
  Matrix<T> left;
  Matrix<T> diagonal;
  Matrix<T> right;
  std::size_t rank = 0;

  /// The nonzero invariant factors, in divisibility order.
  std::vector<T> invariant_factors() const {
    std::vector<T> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(diagonal(i, i));
    return d;
  }
};

namespace detail {

template <class T>
T ext_gcd(T a, T b, T& s, T& t) {
  T s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    T q = a / b;
    T r = a - q * b;
    a = b;
    b = r;
    T s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    T t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

template <class T>
T magnitude(const T& x) {
  return x < 0 ? T(-x) : x;
}

}  // namespace detail

template <class T>
SmithForm<T> smith_normal_form(Matrix<T> m, bool want_left = true, bool want_right = true) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix<T> u = want_left ? Matrix<T>::identity(rows) : Matrix<T>();
  Matrix<T> v = want_right ? Matrix<T>::identity(cols) : Matrix<T>();

  auto row_axpy = [&](std::size_t target, std::size_t source, const T& q, std::size_t from) {
    // row_target -= q * row_source
    for (std::size_t j = from; j < cols; ++j)
      if (m(source, j) != 0) m(target, j) -= q * m(source, j);
    if (want_left)
      for (std::size_t j = 0; j < rows; ++j)
        if (u(source, j) != 0) u(target, j) -= q * u(source, j);
  };
  auto col_axpy_v = [&](std::size_t target, std::size_t source, const T& q) {
    if (want_right)
      for (std::size_t i = 0; i < cols; ++i)
        if (v(i, source) != 0) v(i, target) -= q * v(i, source);
  };
  auto swap_r = [&](std::size_t a, std::size_t b) {
    m.swap_rows(a, b);
    if (want_left) u.swap_rows(a, b);
  };
  auto swap_c = [&](std::size_t a, std::size_t b) {
    m.swap_cols(a, b);
    if (want_right) v.swap_cols(a, b);
  };

  std::size_t t = 0;
  const std::size_t limit = std::min(rows, cols);
  for (; t < limit; ++t) {
    // Smallest nonzero entry of the trailing block; a unit ends the search.
    std::size_t pi = rows, pj = cols;
    T best = 0;
    for (std::size_t i = t; i < rows && best != 1; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const T& x = m(i, j);
        if (x == 0) continue;
        T a = detail::magnitude(x);
        if (pi == rows || a < best) {
          best = a;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (pi == rows) break;
    swap_r(t, pi);
    swap_c(t, pj);

    while (true) {
      bool remainder = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        T q = m(i, t) / m(t, t);
        if (q != 0) row_axpy(i, t, q, t);
        if (m(i, t) != 0) remainder = true;
      }
      if (remainder) {
        std::size_t p = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (m(i, t) != 0 && (p == t || detail::magnitude(m(i, t)) < detail::magnitude(m(p, t)))) p = i;
        if (detail::magnitude(m(p, t)) < detail::magnitude(m(t, t))) swap_r(t, p);
        continue;
      }
      // Column t is clear below the pivot, so column operations only touch row t.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        T q = m(t, j) / m(t, t);
        if (q != 0) {
          m(t, j) -= q * m(t, t);
          col_axpy_v(j, t, q);
        }
        if (m(t, j) != 0) remainder = true;
      }
      if (remainder) {
        std::size_t p = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(t, j) != 0 && (p == t || detail::magnitude(m(t, j)) < detail::magnitude(m(t, p)))) p = j;
        swap_c(t, p);
        continue;
      }
      break;
    }
    if (m(t, t) < 0) {
      for (std::size_t j = t; j < cols; ++j) m(t, j) = -m(t, j);
      if (want_left)
        for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  const std::size_t rank = t;

  // Divisibility chain: replace (a, b) on the diagonal by (gcd, lcm).
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      const T a = m(i, i), b = m(j, j);
      if (b % a == 0) continue;
      T s, tt;
      const T g = detail::ext_gcd(a, b, s, tt);
      // col_i += col_j
      if (want_right)
        for (std::size_t r = 0; r < cols; ++r) v(r, i) += v(r, j);
      // rows (i, j) <- [[s, tt], [-b/g, a/g]] (i, j)
      if (want_left) {
        const T bg = b / g, ag = a / g;
        for (std::size_t c = 0; c < rows; ++c) {
          const T ui = u(i, c), uj = u(j, c);
          u(i, c) = s * ui + tt * uj;
          u(j, c) = ag * uj - bg * ui;
        }
      }
      // col_j -= (tt * b / g) col_i
      const T f = tt * (b / g);
      if (want_right)
        for (std::size_t r = 0; r < cols; ++r) v(r, j) -= f * v(r, i);
      m(i, i) = g;
      m(j, j) = (a / g) * b;
    }
  }

  SmithForm<T> out;
  out.left = std::move(u);
  out.diagonal = std::move(m);
  out.right = std::move(v);
  out.rank = rank;
  return out;
}

/// Arbitrary-precision entry point.
inline SmithForm<BigInt> smith_normal_form(const IntMatrix& m) { return smith_normal_form<BigInt>(m, true, true); }

/// Runs on int64 and retries in BigInt when an intermediate overflows.
inline SmithForm<BigInt> smith_normal_form_fast(const IntMatrix& m, bool want_left, bool want_right) {
  try {
    Matrix<CheckedInt64> small(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) small(i, j) = CheckedInt64(m(i, j));
    auto f = smith_normal_form<CheckedInt64>(std::move(small), want_left, want_right);
    SmithForm<BigInt> out;
    out.left = f.left.template cast<BigInt>();
    out.diagonal = f.diagonal.template cast<BigInt>();
    out.right = f.right.template cast<BigInt>();
    out.rank = f.rank;
    return out;
  } catch (const std::overflow_error&) {
    return smith_normal_form<BigInt>(m, want_left, want_right);
  }
}

}  // namespace tdl
