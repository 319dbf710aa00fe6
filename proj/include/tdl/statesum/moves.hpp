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
#include "tdl/statesum/surface.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace tdl {

/// Replace the edge (by edge index) between two distinct triangles by the other diagonal of their quad.
struct Flip {
  std::size_t edge;
  friend bool operator==(const Flip&, const Flip&) = default;
};
/// Split a triangle into three around a new vertex (1-3 move).
struct BubbleInsert {
  std::size_t triangle;
  friend bool operator==(const BubbleInsert&, const BubbleInsert&) = default;
};
/// Merge the three triangles around a valence-3 vertex (3-1 move).
struct BubbleRemove {
  std::size_t vertex;
  friend bool operator==(const BubbleRemove&, const BubbleRemove&) = default;
};
using Move = std::variant<Flip, BubbleInsert, BubbleRemove>;

inline std::string to_string(const Move& m) {
  if (auto f = std::get_if<Flip>(&m)) return "flip " + std::to_string(f->edge);
  if (auto b = std::get_if<BubbleInsert>(&m)) return "bubble-insert " + std::to_string(b->triangle);
  return "bubble-remove " + std::to_string(std::get<BubbleRemove>(m).vertex);
}

namespace detail {

/// Rebuilds a surface from triangles listed as triples of slot keys. Keys below `old_slots` are slots of the
/// old surface and keep their old partner (unless the partner is also re-listed); larger keys are glued by `fresh`.
inline Surface assemble(const Surface& old, const std::vector<std::array<std::size_t, 3>>& tris,
                        const std::map<std::size_t, std::size_t>& fresh) {
  std::map<std::size_t, std::size_t> position;
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (std::size_t i = 0; i < 3; ++i) position[tris[t][i]] = 3 * t + i;
  std::vector<Surface::Slot> partner(3 * tris.size());
  for (const auto& [key, pos] : position) {
    std::size_t other;
    if (key < old.slot_count()) other = old.partner(key);
    else other = fresh.at(key);
    partner[pos] = position.at(other);
  }
  return Surface(std::move(partner));
}

/// Slot keys of triangle t rotated to start at slot s.
inline std::array<std::size_t, 3> rotated(std::size_t s) {
  const std::size_t t = s / 3, i = s % 3;
  return {3 * t + i, 3 * t + (i + 1) % 3, 3 * t + (i + 2) % 3};
}

inline std::vector<std::array<std::size_t, 3>> identity_triangles(const Surface& s) {
  std::vector<std::array<std::size_t, 3>> out(s.triangle_count());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = {3 * t, 3 * t + 1, 3 * t + 2};
  return out;
}

/// The three corners around a vertex in cyclic order, each as (slot of the opposite side), when the vertex has
/// valence 3 in three distinct triangles; empty otherwise.
inline std::vector<std::size_t> removable_star(const Surface& s, std::size_t v) {
  const auto corners = s.corners_at(v);
  if (corners.size() != 3) return {};
  if (corners[0] / 3 == corners[1] / 3 || corners[0] / 3 == corners[2] / 3 || corners[1] / 3 == corners[2] / 3) return {};
  // Rotated so the vertex is corner 2: outer side, side into the vertex, side out of the vertex.
  auto outer = [](std::size_t c) { return 3 * (c / 3) + (c % 3 + 1) % 3; };
  auto into = [](std::size_t c) { return 3 * (c / 3) + (c % 3 + 2) % 3; };
  std::vector<std::size_t> order{corners[0]};
  for (int step = 0; step < 2; ++step) {
    const std::size_t next_tri = s.partner(into(order.back())) / 3;
    std::size_t found = 3 * s.triangle_count();
    for (auto c : corners)
      if (c / 3 == next_tri) found = c;
    if (found == 3 * s.triangle_count()) return {};
    order.push_back(found);
  }
  if (s.partner(into(order[2])) / 3 != order[0] / 3) return {};
  return {outer(order[0]), outer(order[1]), outer(order[2])};
}

}  // namespace detail

inline bool flip_applicable(const Surface& s, std::size_t edge) {
  const auto edges = s.edges();
  return edge < edges.size() && edges[edge].first / 3 != edges[edge].second / 3;
}

inline bool bubble_remove_applicable(const Surface& s, std::size_t vertex) {
  return vertex < s.vertex_count() && !detail::removable_star(s, vertex).empty() && s.triangle_count() > 3;
}

/// Applies one move; throws DomainError naming the reason when it does not apply.
inline Surface apply_move(const Surface& s, const Move& m) {
  const std::size_t fresh0 = s.slot_count();
  if (auto f = std::get_if<Flip>(&m)) {
    const auto edges = s.edges();
    if (f->edge >= edges.size()) throw DomainError("flip: no edge " + std::to_string(f->edge));
    const auto [e, e2] = edges[f->edge];
    if (e / 3 == e2 / 3)
      throw DomainError("flip: edge " + std::to_string(f->edge) + " has the same triangle on both sides");
    // (e, a, b) and (e2, c, d) become (b, c, x) and (d, a, y) with x glued to y.
    const auto t1 = detail::rotated(e), t2 = detail::rotated(e2);
    auto tris = detail::identity_triangles(s);
    const std::size_t x = fresh0, y = fresh0 + 1;
    tris[e / 3] = {t1[2], t2[1], x};
    tris[e2 / 3] = {t2[2], t1[1], y};
    return detail::assemble(s, tris, {{x, y}, {y, x}});
  }
  if (auto b = std::get_if<BubbleInsert>(&m)) {
    if (b->triangle >= s.triangle_count()) throw DomainError("bubble-insert: no triangle " + std::to_string(b->triangle));
    const std::size_t t = b->triangle;
    auto tris = detail::identity_triangles(s);
    // Corners (P, Q, R) and new vertex X: (a, Q->X, X->P), (b, R->X, X->Q), (c, P->X, X->R).
    const std::size_t q_x = fresh0, x_p = fresh0 + 1, r_x = fresh0 + 2, x_q = fresh0 + 3, p_x = fresh0 + 4, x_r = fresh0 + 5;
    tris[t] = {3 * t, q_x, x_p};
    tris.push_back({3 * t + 1, r_x, x_q});
    tris.push_back({3 * t + 2, p_x, x_r});
    return detail::assemble(s, tris, {{q_x, x_q}, {x_q, q_x}, {r_x, x_r}, {x_r, r_x}, {p_x, x_p}, {x_p, p_x}});
  }
  const std::size_t v = std::get<BubbleRemove>(m).vertex;
  if (v >= s.vertex_count()) throw DomainError("bubble-remove: no vertex " + std::to_string(v));
  const auto outer = detail::removable_star(s, v);
  if (outer.empty())
    throw DomainError("bubble-remove: vertex " + std::to_string(v) +
                      " is not surrounded by exactly three distinct triangles");
  if (s.triangle_count() <= 3)
    throw DomainError("bubble-remove: the surface would have fewer than two triangles");
  std::array<std::size_t, 3> gone{outer[0] / 3, outer[1] / 3, outer[2] / 3};
  const std::size_t keep = std::min({gone[0], gone[1], gone[2]});
  std::vector<std::array<std::size_t, 3>> tris;
  for (std::size_t t = 0; t < s.triangle_count(); ++t) {
    if (t == keep) tris.push_back({outer[0], outer[1], outer[2]});
    else if (t != gone[0] && t != gone[1] && t != gone[2]) tris.push_back({3 * t, 3 * t + 1, 3 * t + 2});
  }
  return detail::assemble(s, tris, {});
}

}  // namespace tdl
