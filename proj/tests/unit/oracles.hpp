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

// Independent brute-force reference computations shared by the test binaries. Nothing here calls into the
// library's algorithms; only plain tables and integers are used.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

/// Cayley table as a flat row-major vector.
struct Table {
  std::size_t n = 0;
  std::vector<std::size_t> mul;
  std::size_t operator()(std::size_t a, std::size_t b) const { return mul[a * n + b]; }
  std::size_t identity() const {
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = mul[e * n + x] == x && mul[x * n + e] == x;
      if (ok) return e;
    }
    return n;
  }
  std::size_t inverse(std::size_t a) const {
    const auto e = identity();
    for (std::size_t b = 0; b < n; ++b)
      if (mul[a * n + b] == e) return b;
    return n;
  }
};

inline Table cyclic(std::size_t n) {
  Table t{n, std::vector<std::size_t>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.mul[a * n + b] = (a + b) % n;
  return t;
}

inline Table product(const Table& g, const Table& h) {
  Table t{g.n * h.n, std::vector<std::size_t>(g.n * h.n * g.n * h.n)};
  for (std::size_t a = 0; a < t.n; ++a)
    for (std::size_t b = 0; b < t.n; ++b) t.mul[a * t.n + b] = g(a / h.n, b / h.n) * h.n + h(a % h.n, b % h.n);
  return t;
}

/// Normalized n-cochains with values in Z/m, stored over all n-tuples (first argument most significant).
/// Coboundary by the alternating bar formula.
inline std::vector<std::uint32_t> coboundary(const Table& g, std::size_t n, const std::vector<std::uint32_t>& c, std::uint32_t m) {
  std::size_t count = 1;
  for (std::size_t i = 0; i <= n; ++i) count *= g.n;
  std::vector<std::uint32_t> out(count);
  std::vector<std::size_t> x(n + 1), y(n);
  auto index = [&](const std::vector<std::size_t>& t) {
    std::size_t k = 0;
    for (auto v : t) k = k * g.n + v;
    return k;
  };
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t r = idx;
    for (std::size_t i = n + 1; i-- > 0;) {
      x[i] = r % g.n;
      r /= g.n;
    }
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i + 1];
    s += c[index(y)];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0, j = 0; k <= n; ++k) {
        if (k == i + 1) continue;
        y[j++] = k == i ? g(x[i], x[i + 1]) : x[k];
      }
      s += (i % 2 == 0 ? -1 : 1) * static_cast<long long>(c[index(y)]);
    }
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i];
    s += (n % 2 == 0 ? -1 : 1) * static_cast<long long>(c[index(y)]);
    out[idx] = static_cast<std::uint32_t>(((s % m) + m) % m);
  }
  return out;
}

/// Visits every normalized Z/m-valued n-cochain (as a full tuple array).
inline void for_each_cochain(const Table& g, std::size_t n, std::uint32_t m,
                             const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  const auto e = g.identity();
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= g.n;
  std::vector<std::size_t> support;
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t r = idx;
    bool has_e = false;
    for (std::size_t i = 0; i < n; ++i) {
      has_e = has_e || r % g.n == e;
      r /= g.n;
    }
    if (!has_e) support.push_back(idx);
  }
  std::vector<std::uint32_t> c(count, 0);
  while (true) {
    visit(c);
    std::size_t k = 0;
    while (k < support.size() && ++c[support[k]] == m) c[support[k++]] = 0;
    if (k == support.size()) return;
  }
}

/// |H^n(G, Q/Z)| by enumeration: cocycles with values in (1/m)Z/Z, m = |G| (every class has such a representative),
/// modulo coboundaries of cochains with values in (1/M)Z/Z, M = |G|^2 (enough to reach every such coboundary).
inline std::size_t cohomology_order(const Table& g, std::size_t n) {
  const auto m = static_cast<std::uint32_t>(g.n), big = m * m;
  std::size_t cocycles = 0;
  for_each_cochain(g, n, m, [&](const std::vector<std::uint32_t>& c) {
    const auto d = coboundary(g, n, c, m);
    if (std::all_of(d.begin(), d.end(), [](auto v) { return v == 0; })) ++cocycles;
  });
  std::set<std::vector<std::uint32_t>> boundaries;
  for_each_cochain(g, n - 1, big, [&](const std::vector<std::uint32_t>& c) {
    auto d = coboundary(g, n - 1, c, big);
    if (!std::all_of(d.begin(), d.end(), [&](auto v) { return v % m == 0; })) return;
    for (auto& v : d) v /= m;
    boundaries.insert(d);
  });
  return cocycles / boundaries.size();
}

/// Whether psi (values in Z/m) is the coboundary of some (n-1)-cochain with values in Z/mm, m | mm.
inline bool is_coboundary(const Table& g, std::size_t n, const std::vector<std::uint32_t>& psi, std::uint32_t m, std::uint32_t mm) {
  bool found = false;
  const std::uint32_t scale = mm / m;
  for_each_cochain(g, n - 1, mm, [&](const std::vector<std::uint32_t>& c) {
    if (found) return;
    const auto d = coboundary(g, n - 1, c, mm);
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] != psi[i] * scale) return;
    found = true;
  });
  return found;
}

/// Number of (a1, b1, ..., ag, bg) with prod [a_i, b_i] = e.
inline std::size_t surface_hom_count(const Table& g, std::size_t genus) {
  // Distribution of commutators, then convolve genus times.
  const auto e = g.identity();
  std::vector<std::size_t> comm(g.n, 0);
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b) ++comm[g(g(a, b), g(g.inverse(a), g.inverse(b)))];
  std::vector<std::size_t> dist(g.n, 0);
  dist[e] = 1;
  for (std::size_t i = 0; i < genus; ++i) {
    std::vector<std::size_t> next(g.n, 0);
    for (std::size_t x = 0; x < g.n; ++x)
      for (std::size_t y = 0; y < g.n; ++y) next[g(x, y)] += dist[x] * comm[y];
    dist = next;
  }
  return dist[e];
}

/// Determinant by cofactor expansion over rationals-as-fractions of long long (small matrices only).
inline long long laplace_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    det += (j % 2 ? -1 : 1) * m[0][j] * laplace_det(minor);
  }
  return det;
}

}  // namespace oracle
