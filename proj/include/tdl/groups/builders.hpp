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
#include "tdl/groups/finite_group.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tdl::groups {

inline GroupPtr make(std::vector<std::string> names, std::vector<FiniteGroup::Element> table) {
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(table));
}

/// Z/n with elements e, a, a^2, ...
inline GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : k == 1 ? "a" : "a^" + std::to_string(k));
  std::vector<FiniteGroup::Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return make(std::move(names), std::move(table));
}

/// Direct product; element (x, y) has index x * |H| + y and name "(x,y)".
inline GroupPtr product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t y = 0; y < nh; ++y) names.push_back("(" + g.name(x) + "," + h.name(y) + ")");
  std::vector<FiniteGroup::Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh);
  return make(std::move(names), std::move(table));
}

/// Klein four-group Z/2 x Z/2.
inline GroupPtr klein_four() { return product(*cyclic(2), *cyclic(2)); }

/// Dihedral group of order 2n; index k + n*f is r^k s^f.
inline GroupPtr dihedral(std::size_t n) {
  if (n == 0) throw DomainError("dihedral parameter must be positive");
  std::vector<std::string> names;
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t k = 0; k < n; ++k) {
      std::string r = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
      std::string s = f == 0 ? "" : "s";
      names.push_back(r.empty() && s.empty() ? "e" : r + s);
    }
  const std::size_t order = 2 * n;
  std::vector<FiniteGroup::Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t a = x % n, f = x / n, b = y % n, g = y / n;
      std::size_t k = f == 0 ? (a + b) % n : (a + n - b) % n;
      table[x * order + y] = k + n * ((f + g) % 2);
    }
  return make(std::move(names), std::move(table));
}

/// Symmetric group on {1..n}, n <= 4; permutations in lexicographic one-line notation,
/// composed as (s t)(i) = s(t(i)).
inline GroupPtr symmetric(std::size_t n) {
  if (n == 0 || n > 4) throw SizeError("symmetric group supported for 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += static_cast<char>('1' + v);
    names.push_back(s);
  }
  const std::size_t order = perms.size();
  std::vector<FiniteGroup::Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a * order + b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return make(std::move(names), std::move(table));
}

/// Smallest subgroup containing `elements`.
inline std::vector<FiniteGroup::Element> closure(const FiniteGroup& g, std::vector<FiniteGroup::Element> elements) {
  std::vector<char> in(g.order(), 0);
  std::vector<FiniteGroup::Element> members{g.identity()};
  in[g.identity()] = 1;
  for (auto x : elements)
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto c : {g.mul(members[i], members[j]), g.mul(members[j], members[i])})
        if (!in[c]) {
          in[c] = 1;
          members.push_back(c);
        }
  std::sort(members.begin(), members.end());
  return members;
}

/// All subgroups, ordered by size then by sorted element list. |G| <= 64.
inline std::vector<SubgroupEmbedding> subgroups(const GroupPtr& g) {
  if (g->order() > 64) throw SizeError("subgroup enumeration supports groups of order <= 64");
  std::set<std::vector<FiniteGroup::Element>> found;
  std::vector<std::vector<FiniteGroup::Element>> queue;
  auto add = [&](std::vector<FiniteGroup::Element> s) {
    if (found.insert(s).second) queue.push_back(std::move(s));
  };
  add(closure(*g, {}));
  for (FiniteGroup::Element x = 0; x < g->order(); ++x) add(closure(*g, {x}));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto base = queue[i];
    std::vector<char> in(g->order(), 0);
    for (auto x : base) in[x] = 1;
    for (FiniteGroup::Element x = 0; x < g->order(); ++x) {
      if (in[x]) continue;
      auto gens = base;
      gens.push_back(x);
      add(closure(*g, std::move(gens)));
    }
  }
  std::vector<std::vector<FiniteGroup::Element>> sets(found.begin(), found.end());
  std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<SubgroupEmbedding> out;
  for (auto& s : sets) out.push_back(SubgroupEmbedding::from_elements(g, std::move(s)));
  return out;
}

/// All ordered pairs (g, h) with gh = hg, lexicographic.
inline std::vector<std::pair<FiniteGroup::Element, FiniteGroup::Element>> commuting_pairs(const FiniteGroup& g) {
  std::vector<std::pair<FiniteGroup::Element, FiniteGroup::Element>> out;
  for (FiniteGroup::Element a = 0; a < g.order(); ++a)
    for (FiniteGroup::Element b = 0; b < g.order(); ++b)
      if (g.mul(a, b) == g.mul(b, a)) out.emplace_back(a, b);
  return out;
}

}  // namespace tdl::groups
