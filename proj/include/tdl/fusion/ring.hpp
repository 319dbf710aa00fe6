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
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tdl {

/// Based ring with nonnegative integer structure constants N_{ij}^k.
///
/// The constructor checks only shapes; the ring axioms are checked by validate_ring so that
/// broken data can still be inspected.
class FusionRing {
 public:
  using Label = std::size_t;

  FusionRing(std::vector<std::string> labels, Label unit, std::vector<Label> dual, std::vector<std::size_t> n)
      : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)), n_(std::move(n)) {
    const std::size_t r = labels_.size();
    if (r == 0) throw DomainError("fusion ring needs at least one label");
    if (unit_ >= r) throw DomainError("unit label out of range");
    if (dual_.size() != r) throw DomainError("dual map has the wrong size");
    for (Label d : dual_)
      if (d >= r) throw DomainError("dual map names a label out of range");
    if (n_.size() != r * r * r) throw DomainError("structure constant table has the wrong size");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (labels_[i] == labels_[j]) throw DomainError("duplicate label '" + labels_[i] + "'");
  }

  /// Group ring: one label per element, N from the Cayley table.
  static FusionRing from_group(const FiniteGroup& g) {
    const std::size_t r = g.order();
    std::vector<Label> dual(r);
    std::vector<std::size_t> n(r * r * r, 0);
    for (std::size_t a = 0; a < r; ++a) {
      dual[a] = g.inverse(a);
      for (std::size_t b = 0; b < r; ++b) n[(a * r + b) * r + g.mul(a, b)] = 1;
    }
    return FusionRing(g.names(), g.identity(), std::move(dual), std::move(n));
  }

  std::size_t rank() const noexcept { return labels_.size(); }
  const std::string& label(Label i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Label unit() const noexcept { return unit_; }
  Label dual(Label i) const { return dual_.at(i); }
  std::size_t n(Label i, Label j, Label k) const { return n_[(i * rank() + j) * rank() + k]; }

  std::optional<Label> find(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == name) return i;
    return std::nullopt;
  }
  Label index(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw DomainError("unknown label '" + name + "'");
  }
  void check_label(Label i) const {
    if (i >= rank()) throw DomainError("label index " + std::to_string(i) + " out of range");
  }

  friend bool operator==(const FusionRing&, const FusionRing&) = default;

 private:
  std::vector<std::string> labels_;
  Label unit_;
  std::vector<Label> dual_;
  std::vector<std::size_t> n_;
};

struct RingViolation {
  enum class Kind { Unit, Associativity, Duality, DualInvolution };
  Kind kind;
  std::vector<FusionRing::Label> where;
  std::string message;
};

struct RingReport {
  std::vector<RingViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
  bool has(RingViolation::Kind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](const RingViolation& v) { return v.kind == k; });
  }
};

/// Exhaustive check of the unit, associativity and duality axioms; every violation is listed.
inline RingReport validate_ring(const FusionRing& r) {
  RingReport rep;
  const std::size_t n = r.rank();
  const auto u = r.unit();
  auto name = [&](FusionRing::Label i) { return r.label(i); };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t want = j == k ? 1 : 0;
      if (r.n(u, j, k) != want || r.n(j, u, k) != want)
        rep.violations.push_back({RingViolation::Kind::Unit, {j, k},
                                  "unit does not act as identity on " + name(j) + " -> " + name(k)});
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (r.dual(r.dual(i)) != i)
      rep.violations.push_back({RingViolation::Kind::DualInvolution, {i}, "dual is not an involution at " + name(i)});
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t want = j == r.dual(i) ? 1 : 0;
      if (r.n(i, j, u) != want)
        rep.violations.push_back({RingViolation::Kind::Duality, {i, j},
                                  "N(" + name(i) + ", " + name(j) + " -> unit) = " + std::to_string(r.n(i, j, u)) +
                                      ", expected " + std::to_string(want)});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          std::size_t lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += r.n(i, j, m) * r.n(m, k, l);
            rhs += r.n(j, k, m) * r.n(i, m, l);
          }
          if (lhs != rhs)
            rep.violations.push_back({RingViolation::Kind::Associativity, {i, j, k, l},
                                      "(" + name(i) + " " + name(j) + ") " + name(k) + " and " + name(i) + " (" + name(j) +
                                          " " + name(k) + ") differ in " + name(l) + ": " + std::to_string(lhs) +
                                          " vs " + std::to_string(rhs)});
        }
  return rep;
}

/// Fusion channels of x * y, each label repeated by its multiplicity, in label order.
inline std::vector<FusionRing::Label> fuse(const FusionRing& r, FusionRing::Label x, FusionRing::Label y) {
  r.check_label(x);
  r.check_label(y);
  std::vector<FusionRing::Label> out;
  for (std::size_t k = 0; k < r.rank(); ++k)
    for (std::size_t m = 0; m < r.n(x, y, k); ++m) out.push_back(k);
  return out;
}

inline std::vector<FusionRing::Label> fuse(const FusionRing& r, const std::string& x, const std::string& y) {
  return fuse(r, r.index(x), r.index(y));
}

inline bool is_group_like(const FusionRing& r, FusionRing::Label x) {
  const auto channels = fuse(r, x, r.dual(x));
  return channels.size() == 1 && channels[0] == r.unit();
}

/// Group formed by the invertible labels; element i of the group is labels[i].
struct GroupLikes {
  GroupPtr group;
  std::vector<FusionRing::Label> labels;
};

inline GroupLikes group_likes(const FusionRing& r) {
  GroupLikes out;
  for (std::size_t x = 0; x < r.rank(); ++x)
    if (is_group_like(r, x)) out.labels.push_back(x);
  const std::size_t n = out.labels.size();
  std::map<FusionRing::Label, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[out.labels[i]] = i;
  std::vector<std::string> names;
  std::vector<FiniteGroup::Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(r.label(out.labels[i]));
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = fuse(r, out.labels[i], out.labels[j]);
      if (c.size() != 1 || !pos.count(c[0]))
        throw DomainError("group-like labels " + r.label(out.labels[i]) + " and " + r.label(out.labels[j]) +
                          " do not fuse to a single group-like label");
      table[i * n + j] = pos[c[0]];
    }
  }
  out.group = std::make_shared<const FiniteGroup>(std::move(names), std::move(table));
  return out;
}

/// True iff x * dual(x) decomposes into group-like labels only.
inline bool is_duality_defect(const FusionRing& r, FusionRing::Label x) {
  for (auto k : fuse(r, x, r.dual(x)))
    if (!is_group_like(r, k)) return false;
  return true;
}

inline bool is_duality_defect(const FusionRing& r, const std::string& x) { return is_duality_defect(r, r.index(x)); }

enum class DefectKind { GroupLike, Duality, Ordinary };

inline DefectKind classify_defect(const FusionRing& r, FusionRing::Label x) {
  if (is_group_like(r, x)) return DefectKind::GroupLike;
  return is_duality_defect(r, x) ? DefectKind::Duality : DefectKind::Ordinary;
}

inline const char* to_string(DefectKind k) {
  switch (k) {
    case DefectKind::GroupLike: return "GROUP-LIKE";
    case DefectKind::Duality: return "DUALITY";
    case DefectKind::Ordinary: return "ORDINARY";
  }
  return "?";
}

}  // namespace tdl
