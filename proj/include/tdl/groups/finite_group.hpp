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
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tdl {

/// Raised when a multiplication table fails validation.
class GroupTableError : public DomainError {
 public:
  GroupTableError(const std::string& what, std::array<std::size_t, 3> witness)
      : DomainError(what), witness_(witness) {}
  /// The violating (a, b, c) triple; for Latin-square failures c repeats an entry.
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<std::size_t, 3> witness_;
};

/// A finite group given densely by its Cayley table. Element names are cosmetic.
class FiniteGroup {
 public:
  using Element = std::size_t;

  /// Validates the table: Latin square, identity, full associativity scan.
  FiniteGroup(std::vector<std::string> names, std::vector<Element> table) : names_(std::move(names)), table_(std::move(table)) {
    const std::size_t n = names_.size();
    if (n == 0) throw DomainError("a group needs at least one element");
    if (table_.size() != n * n) throw DomainError("Cayley table has the wrong size");
    for (Element x : table_)
      if (x >= n) throw DomainError("Cayley table entry out of range");
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<char> row_seen(n, 0), col_seen(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (row_seen[mul(i, j)]++) throw GroupTableError("table is not a Latin square (row repeats an entry)", {i, j, mul(i, j)});
        if (col_seen[mul(j, i)]++) throw GroupTableError("table is not a Latin square (column repeats an entry)", {j, i, mul(j, i)});
      }
    }
    identity_ = n;
    for (std::size_t e = 0; e < n && identity_ == n; ++e) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = mul(e, j) == j && mul(j, e) == j;
      if (ok) identity_ = e;
    }
    if (identity_ == n) throw GroupTableError("table has no identity element", {0, 0, 0});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw GroupTableError("table is not associative at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")",
                                  {a, b, c});
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (mul(a, b) == identity_) inverse_[a] = b;
  }

  std::size_t order() const noexcept { return names_.size(); }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * names_.size() + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Element>& table() const noexcept { return table_; }

  std::optional<Element> find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Element>(it - names_.begin());
  }

  std::size_t element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (Element a = 0; a < order(); ++a)
      for (Element b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Conjugacy classes, each sorted, ordered by smallest member.
  std::vector<std::vector<Element>> conjugacy_classes() const {
    std::vector<std::vector<Element>> classes;
    std::vector<char> seen(order(), 0);
    for (Element a = 0; a < order(); ++a) {
      if (seen[a]) continue;
      std::vector<Element> cls;
      for (Element g = 0; g < order(); ++g) {
        Element c = mul(mul(g, a), inverse(g));
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.names_ == b.names_ && a.table_ == b.table_; }

 private:
  std::vector<std::string> names_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup together with its inclusion into a parent group.
class SubgroupEmbedding {
 public:
  /// `inclusion[i]` is the parent element for subgroup element i. Validated.
  SubgroupEmbedding(GroupPtr subgroup, GroupPtr parent, std::vector<FiniteGroup::Element> inclusion)
      : subgroup_(std::move(subgroup)), parent_(std::move(parent)), inclusion_(std::move(inclusion)) {
    if (!subgroup_ || !parent_) throw DomainError("embedding needs both groups");
    if (inclusion_.size() != subgroup_->order()) throw DomainError("inclusion map has the wrong size");
    std::vector<char> hit(parent_->order(), 0);
    for (auto x : inclusion_) {
      if (x >= parent_->order()) throw DomainError("inclusion maps outside the parent group");
      if (hit[x]++) throw DomainError("inclusion map is not injective");
    }
    for (std::size_t a = 0; a < subgroup_->order(); ++a)
      for (std::size_t b = 0; b < subgroup_->order(); ++b)
        if (inclusion_[subgroup_->mul(a, b)] != parent_->mul(inclusion_[a], inclusion_[b]))
          throw DomainError("inclusion map is not a homomorphism");
  }

  /// The subgroup on `elements` (must be closed), with names and order inherited from the parent.
  static SubgroupEmbedding from_elements(GroupPtr parent, std::vector<FiniteGroup::Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    const std::size_t n = elements.size();
    std::vector<std::size_t> local(parent->order(), n);
    for (std::size_t i = 0; i < n; ++i) local.at(elements[i]) = i;
    std::vector<std::string> names;
    std::vector<FiniteGroup::Element> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(parent->name(elements[i]));
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = local[parent->mul(elements[i], elements[j])];
        if (k == n) throw DomainError("element set is not closed under multiplication");
        table[i * n + j] = k;
      }
    }
    auto sub = std::make_shared<const FiniteGroup>(std::move(names), std::move(table));
    return SubgroupEmbedding(std::move(sub), std::move(parent), std::move(elements));
  }

  /// G inside itself.
  static SubgroupEmbedding whole(GroupPtr group) {
    std::vector<FiniteGroup::Element> id(group->order());
    std::iota(id.begin(), id.end(), 0);
    return SubgroupEmbedding(group, group, std::move(id));
  }

  const GroupPtr& subgroup() const noexcept { return subgroup_; }
  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<FiniteGroup::Element>& inclusion() const noexcept { return inclusion_; }
  FiniteGroup::Element operator()(FiniteGroup::Element a) const { return inclusion_[a]; }

  /// Sorted parent indices of the image.
  std::vector<FiniteGroup::Element> image() const {
    auto img = inclusion_;
    std::sort(img.begin(), img.end());
    return img;
  }

 private:
  GroupPtr subgroup_;
  GroupPtr parent_;
  std::vector<FiniteGroup::Element> inclusion_;
};

}  // namespace tdl
