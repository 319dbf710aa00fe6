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

#include "tdl/cohomology/cohomology.hpp"
#include "tdl/error.hpp"
#include "tdl/exactnum/cyclotomic.hpp"
#include "tdl/frobenius/algebra.hpp"
#include "tdl/groups/builders.hpp"
#include "tdl/statesum/moves.hpp"
#include "tdl/statesum/surface.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tdl {

namespace detail {

/// Sparse tensor: legs are edge-end identifiers; entry e has indices idx[e*legs .. e*legs+legs).
struct SparseTensor {
  std::vector<std::size_t> legs;
  std::vector<std::uint16_t> idx;
  std::vector<Cyclotomic> val;
  std::size_t nnz() const noexcept { return val.size(); }
};

inline SparseTensor contract(const SparseTensor& x, const SparseTensor& y, std::size_t dim) {
  std::vector<std::size_t> xs, ys, xf, yf;  // shared and free positions
  for (std::size_t i = 0; i < x.legs.size(); ++i) {
    auto it = std::find(y.legs.begin(), y.legs.end(), x.legs[i]);
    if (it == y.legs.end()) {
      xf.push_back(i);
    } else {
      xs.push_back(i);
      ys.push_back(static_cast<std::size_t>(it - y.legs.begin()));
    }
  }
  for (std::size_t j = 0; j < y.legs.size(); ++j)
    if (std::find(ys.begin(), ys.end(), j) == ys.end()) yf.push_back(j);
  SparseTensor out;
  for (auto i : xf) out.legs.push_back(x.legs[i]);
  for (auto j : yf) out.legs.push_back(y.legs[j]);
  const std::size_t nl = out.legs.size();
  {
    long double cells = 1;
    for (std::size_t i = 0; i < nl; ++i) cells *= static_cast<long double>(dim);
    if (cells > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
      throw SizeError("state sum contraction has too many open legs");
  }
  auto key_of = [&](const std::uint16_t* row, const std::vector<std::size_t>& pos, std::uint64_t start = 0) {
    std::uint64_t k = start;
    for (auto p : pos) k = k * dim + row[p];
    return k;
  };
  const std::size_t lx = x.legs.size(), ly = y.legs.size();
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> bucket;
  for (std::size_t e = 0; e < y.nnz(); ++e) bucket[key_of(&y.idx[e * ly], ys)].push_back(e);
  std::unordered_map<std::uint64_t, Cyclotomic> acc;
  for (std::size_t e = 0; e < x.nnz(); ++e) {
    const std::uint16_t* row = &x.idx[e * lx];
    auto it = bucket.find(key_of(row, xs));
    if (it == bucket.end()) continue;
    const std::uint64_t head = key_of(row, xf);
    for (auto f : it->second) {
      const std::uint64_t k = key_of(&y.idx[f * ly], yf, head);
      acc[k] += x.val[e] * y.val[f];
    }
  }
  std::vector<std::pair<std::uint64_t, Cyclotomic>> entries;
  entries.reserve(acc.size());
  for (auto& [k, v] : acc)
    if (!v.is_zero()) entries.emplace_back(k, std::move(v));
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.idx.resize(entries.size() * nl);
  out.val.reserve(entries.size());
  for (std::size_t e = 0; e < entries.size(); ++e) {
    std::uint64_t k = entries[e].first;
    for (std::size_t i = nl; i-- > 0;) {
      out.idx[e * nl + i] = static_cast<std::uint16_t>(k % dim);
      k /= dim;
    }
    out.val.push_back(std::move(entries[e].second));
  }
  return out;
}

}  // namespace detail

/// State-sum evaluator for one special symmetric Frobenius algebra.
///
/// Each triangle carries C_{ijk} = eps(e_i e_j e_k) on its slots in orientation order, each edge the inverse
/// pairing, and each vertex the weight 1/beta (so for beta = 1 this is the bare contraction).
class StateSum {
 public:
  explicit StateSum(Algebra a) : algebra_(std::move(a)) {
    const auto report = validate_algebra(algebra_);
    if (!report.special_symmetric_frobenius())
      throw DomainError("state sum needs a special symmetric Frobenius algebra" +
                        (report.problems.empty() ? std::string() : ": " + report.problems.front()));
    const std::size_t d = algebra_.dim();
    if (d > 255) throw SizeError("algebra too large for the state sum");
    beta_inverse_ = report.beta->inverse();
    const auto kinv = inverse(algebra_.pairing());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (!kinv(i, j).is_zero()) {
          edge_.idx.insert(edge_.idx.end(), {static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)});
          edge_.val.push_back(kinv(i, j));
        }
      }
    const auto kappa = algebra_.pairing();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          Cyclotomic v;  // eps(e_i e_j e_k) = sum_m c(i,j,m) kappa(m,k)
          for (const auto& t : algebra_.terms(i, j))
            if (!kappa(t.k, k).is_zero()) v += t.value * kappa(t.k, k);
          if (v.is_zero()) continue;
          triangle_.idx.insert(triangle_.idx.end(), {static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                                                     static_cast<std::uint16_t>(k)});
          triangle_.val.push_back(std::move(v));
        }
  }

  const Algebra& algebra() const noexcept { return algebra_; }

  Cyclotomic evaluate(const Surface& s) const {
    const std::size_t d = algebra_.dim();
    std::vector<detail::SparseTensor> live;
    // A triangle's legs are its slots; an edge tensor joins the two slots it glues.
    for (std::size_t t = 0; t < s.triangle_count(); ++t) {
      detail::SparseTensor x = triangle_;
      x.legs = {3 * t, 3 * t + 1, 3 * t + 2};
      live.push_back(std::move(x));
    }
    for (const auto& [a, b] : s.edges()) {
      detail::SparseTensor x = edge_;
      x.legs = {a, b};
      live.push_back(std::move(x));
    }
    while (live.size() > 1) {
      // Greedy: the pair with a shared leg whose result has the fewest legs, then the smallest nnz product.
      std::size_t bi = 0, bj = 0, best_legs = std::numeric_limits<std::size_t>::max();
      long double best_cost = 0;
      for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = i + 1; j < live.size(); ++j) {
          std::size_t shared = 0;
          for (auto l : live[i].legs)
            if (std::find(live[j].legs.begin(), live[j].legs.end(), l) != live[j].legs.end()) ++shared;
          if (shared == 0) continue;
          const std::size_t legs = live[i].legs.size() + live[j].legs.size() - 2 * shared;
          const long double cost = static_cast<long double>(live[i].nnz()) * static_cast<long double>(live[j].nnz());
          if (legs < best_legs || (legs == best_legs && cost < best_cost)) {
            best_legs = legs;
            best_cost = cost;
            bi = i;
            bj = j;
          }
        }
      if (best_legs == std::numeric_limits<std::size_t>::max()) throw Error("state sum network is disconnected");
      detail::SparseTensor merged = detail::contract(live[bi], live[bj], d);
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(bj));
      live[bi] = std::move(merged);
    }
    Cyclotomic value = live[0].nnz() == 0 ? Cyclotomic() : live[0].val[0];
    for (std::size_t v = 0; v < s.vertex_count(); ++v) value *= beta_inverse_;
    return value;
  }

 private:
  Algebra algebra_;
  Cyclotomic beta_inverse_;
  detail::SparseTensor triangle_;
  detail::SparseTensor edge_;
};

inline Cyclotomic evaluate(const Surface& s, const Algebra& a) { return StateSum(a).evaluate(s); }

/// (1/|H|) sum over commuting pairs of exp(2 pi i (phi(g,h) - phi(h,g))), cross-checked against the state sum of the
/// twisted group algebra on the standard torus.
inline Cyclotomic orbifold_torus(const GroupPtr& h, const Cochain& phi) {
  if (phi.degree() != 2 || !(phi.group() == h || *phi.group() == *h))
    throw DomainError("discrete torsion needs a 2-cochain on the same group");
  if (!is_cocycle(phi)) throw DomainError("discrete torsion needs a 2-cocycle");
  const std::size_t n = h->order();
  const auto m = static_cast<std::uint32_t>(phi.modulus());
  Cyclotomic sum;
  for (const auto& [g, k] : groups::commuting_pairs(*h)) {
    const auto r = static_cast<std::int64_t>(phi.residue(g * n + k)) - static_cast<std::int64_t>(phi.residue(k * n + g));
    sum += Cyclotomic::root_of_unity(m, r);
  }
  const Cyclotomic value = sum * Cyclotomic(Rational(1, static_cast<long long>(n)));
  const Cyclotomic check = evaluate(standard_surface(1), twisted_group_algebra(h, phi));
  if (value != check) throw Error("discrete torsion sum disagrees with the twisted state sum");
  return value.minimized();
}

struct MoveSuiteReport {
  Cyclotomic initial;
  std::vector<Move> moves;
  std::vector<Cyclotomic> values;  ///< value after each move
  std::vector<std::size_t> triangle_counts;
  bool all_equal() const {
    return std::all_of(values.begin(), values.end(), [&](const Cyclotomic& v) { return v == initial; });
  }
};

/// Moves that apply to s, grouped by kind; bubble insertion only while the surface has fewer than max_triangles.
inline std::array<std::vector<Move>, 3> applicable_moves(const Surface& s, std::size_t max_triangles) {
  std::array<std::vector<Move>, 3> out;
  const auto edges = s.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].first / 3 != edges[e].second / 3) out[0].push_back(Flip{e});
  if (s.triangle_count() < max_triangles)
    for (std::size_t t = 0; t < s.triangle_count(); ++t) out[1].push_back(BubbleInsert{t});
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    if (bubble_remove_applicable(s, v)) out[2].push_back(BubbleRemove{v});
  return out;
}

/// Applies `count` random moves drawn from a seeded mt19937_64 (kind uniform among kinds that apply, then
/// position uniform) and evaluates after each. Surfaces stay within 6 triangles of the start.
inline MoveSuiteReport move_invariance_suite(const Surface& start, const Algebra& a, std::uint64_t seed, std::size_t count) {
  const StateSum sum(a);
  std::mt19937_64 rng(seed);
  MoveSuiteReport rep;
  rep.initial = sum.evaluate(start);
  const std::size_t cap = start.triangle_count() + 6;
  Surface s = start;
  for (std::size_t step = 0; step < count; ++step) {
    const auto options = applicable_moves(s, cap);
    std::vector<std::size_t> kinds;
    for (std::size_t k = 0; k < 3; ++k)
      if (!options[k].empty()) kinds.push_back(k);
    if (kinds.empty()) throw Error("no move applies");
    const auto& pool = options[kinds[rng() % kinds.size()]];
    const Move m = pool[rng() % pool.size()];
    s = apply_move(s, m);
    rep.moves.push_back(m);
    rep.values.push_back(sum.evaluate(s));
    rep.triangle_counts.push_back(s.triangle_count());
  }
  return rep;
}

}  // namespace tdl
