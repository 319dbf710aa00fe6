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

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace tdl {

/// Closed oriented surface glued from triangles.
///
/// Triangle t owns slots 3t, 3t+1, 3t+2; slot 3t+i is the side running from corner i to corner i+1 in the
/// triangle's orientation. partner() pairs slots; every gluing reverses orientation, so the orientation of
/// all triangles is consistent by construction.
class Surface {
 public:
  using Slot = std::size_t;

  explicit Surface(std::vector<Slot> partner) : partner_(std::move(partner)) {
    if (partner_.empty() || partner_.size() % 3 != 0) throw DomainError("surface needs a positive multiple of 3 slots");
    for (Slot s = 0; s < partner_.size(); ++s) {
      const Slot p = partner_[s];
      if (p >= partner_.size()) throw DomainError("slot " + std::to_string(s) + " glued to a missing slot");
      if (p == s) throw DomainError("slot " + std::to_string(s) + " glued to itself");
      if (partner_[p] != s) throw DomainError("gluing is not symmetric at slot " + std::to_string(s));
    }
    compute_vertices();
    check_connected();
  }

  std::size_t triangle_count() const noexcept { return partner_.size() / 3; }
  std::size_t slot_count() const noexcept { return partner_.size(); }
  std::size_t edge_count() const noexcept { return partner_.size() / 2; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  long long euler_characteristic() const noexcept {
    return static_cast<long long>(vertex_count_) - static_cast<long long>(edge_count()) +
           static_cast<long long>(triangle_count());
  }
  long long genus() const noexcept { return (2 - euler_characteristic()) / 2; }

  Slot partner(Slot s) const { return partner_.at(s); }
  const std::vector<Slot>& partners() const noexcept { return partner_; }
  static std::size_t triangle_of(Slot s) noexcept { return s / 3; }

  /// Edges as (lower slot, higher slot), ordered by lower slot; the position is the edge index.
  std::vector<std::pair<Slot, Slot>> edges() const {
    std::vector<std::pair<Slot, Slot>> out;
    for (Slot s = 0; s < partner_.size(); ++s)
      if (s < partner_[s]) out.emplace_back(s, partner_[s]);
    return out;
  }

  /// Vertex of corner 3t+i; vertices are numbered in order of their first corner.
  std::size_t vertex_of_corner(std::size_t corner) const { return corner_vertex_.at(corner); }
  std::vector<std::size_t> corners_at(std::size_t vertex) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < corner_vertex_.size(); ++c)
      if (corner_vertex_[c] == vertex) out.push_back(c);
    return out;
  }

  /// Triangle perm[t] of the result is triangle t here, rotated so that its slot (i + rot[t]) % 3 becomes slot i.
  Surface relabeled(const std::vector<std::size_t>& perm, const std::vector<std::size_t>& rot) const {
    const std::size_t n = triangle_count();
    if (perm.size() != n || rot.size() != n) throw DomainError("relabeling has the wrong size");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
      if (p >= n || seen[p]) throw DomainError("relabeling is not a permutation");
      seen[p] = true;
    }
    auto image = [&](Slot s) { return 3 * perm[s / 3] + (s % 3 + 3 - rot[s / 3] % 3) % 3; };
    std::vector<Slot> out(partner_.size());
    for (Slot s = 0; s < partner_.size(); ++s) out[image(s)] = image(partner_[s]);
    return Surface(std::move(out));
  }

  friend bool operator==(const Surface& a, const Surface& b) { return a.partner_ == b.partner_; }

 private:
  void compute_vertices() {
    const std::size_t corners = partner_.size();
    std::vector<std::size_t> parent(corners);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    auto corner = [](Slot s, std::size_t offset) { return 3 * (s / 3) + (s % 3 + offset) % 3; };
    for (Slot s = 0; s < partner_.size(); ++s) {
      const Slot p = partner_[s];
      // Side s runs from corner s to corner s+1; its partner runs the other way.
      unite(corner(s, 0), corner(p, 1));
      unite(corner(s, 1), corner(p, 0));
    }
    corner_vertex_.assign(corners, 0);
    std::vector<std::size_t> label(corners, static_cast<std::size_t>(-1));
    vertex_count_ = 0;
    for (std::size_t c = 0; c < corners; ++c) {
      const std::size_t r = find(c);
      if (label[r] == static_cast<std::size_t>(-1)) label[r] = vertex_count_++;
      corner_vertex_[c] = label[r];
    }
  }

  void check_connected() const {
    const std::size_t n = triangle_count();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t t = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t u = partner_[3 * t + i] / 3;
        if (!seen[u]) {
          seen[u] = true;
          ++count;
          stack.push_back(u);
        }
      }
    }
    if (count != n) throw DomainError("surface is not connected");
  }

  std::vector<Slot> partner_;
  std::vector<std::size_t> corner_vertex_;
  std::size_t vertex_count_ = 0;
};

/// True iff b is a relabeling of a (triangle order and cyclic slot rotation).
inline bool equivalent(const Surface& a, const Surface& b) {
  const std::size_t n = a.triangle_count();
  if (n != b.triangle_count()) return false;
  for (std::size_t t0 = 0; t0 < n; ++t0)
    for (std::size_t r0 = 0; r0 < 3; ++r0) {
      // map[t] = (triangle in b, rotation) with slot (t, i) -> (map[t], (i + rot) % 3)
      std::vector<std::pair<std::size_t, std::size_t>> map(n, {n, 0});
      std::vector<bool> used(n, false);
      map[0] = {t0, r0};
      used[t0] = true;
      std::vector<std::size_t> queue{0};
      bool ok = true;
      for (std::size_t q = 0; q < queue.size() && ok; ++q) {
        const std::size_t t = queue[q];
        for (std::size_t i = 0; i < 3 && ok; ++i) {
          const std::size_t s = 3 * t + i;
          const std::size_t img = 3 * map[t].first + (i + map[t].second) % 3;
          const std::size_t p = a.partner(s), pimg = b.partner(img);
          const std::size_t u = p / 3;
          const std::size_t rot = (pimg % 3 + 3 - p % 3) % 3;
          if (map[u].first == n) {
            if (used[pimg / 3]) {
              ok = false;
              break;
            }
            map[u] = {pimg / 3, rot};
            used[pimg / 3] = true;
            queue.push_back(u);
          } else if (map[u].first != pimg / 3 || map[u].second != rot) {
            ok = false;
          }
        }
      }
      if (ok) return true;
    }
  return false;
}

/// Deterministic reference surfaces: a sphere of two cones, and for g >= 1 the fan triangulation of the
/// 4g-gon with sides a1 b1 a1^-1 b1^-1 ... (4g - 2 triangles, one vertex).
inline Surface standard_surface(int genus) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  if (genus > 3) throw SizeError("standard surfaces are provided for genus <= 3");
  if (genus == 0) return Surface({1, 0, 5, 4, 3, 2});
  const std::size_t sides = 4 * static_cast<std::size_t>(genus);
  const std::size_t tris = sides - 2;
  std::vector<Surface::Slot> partner(3 * tris);
  auto glue = [&](std::size_t a, std::size_t b) {
    partner[a] = b;
    partner[b] = a;
  };
  // Triangle m - 1 has corners (P0, Pm, Pm+1), m = 1 .. sides - 2.
  auto side_slot = [&](std::size_t k) -> std::size_t {
    if (k == 0) return 0;
    if (k == sides - 1) return 3 * (tris - 1) + 2;
    return 3 * (k - 1) + 1;
  };
  for (std::size_t m = 2; m <= sides - 2; ++m) glue(3 * (m - 2) + 2, 3 * (m - 1));  // diagonal P0 Pm
  for (std::size_t i = 0; i < static_cast<std::size_t>(genus); ++i) {
    glue(side_slot(4 * i), side_slot(4 * i + 2));
    glue(side_slot(4 * i + 1), side_slot(4 * i + 3));
  }
  return Surface(std::move(partner));
}

}  // namespace tdl
