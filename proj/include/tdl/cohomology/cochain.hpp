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
#include "tdl/exactnum/torsion_phase.hpp"
#include "tdl/groups/finite_group.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tdl {

/// A normalized cochain G^n -> Q/Z (trivial action): the value is 0 whenever an
/// argument is the identity.
///
/// Values are stored as residues r / modulus with one common modulus, kept minimal,
/// so equality is structural. Tuples are indexed row-major with the first argument
/// most significant.
class Cochain {
 public:
  using Element = FiniteGroup::Element;
  /// Largest common denominator supported for stored phases.
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  Cochain(GroupPtr group, std::size_t degree) : group_(std::move(group)), degree_(degree) {
    if (!group_) throw DomainError("cochain needs a group");
    residues_.assign(tuple_count(*group_, degree_), 0);
  }

  /// Builds from a value per tuple; rejects non-normalized input.
  static Cochain from_function(GroupPtr group, std::size_t degree,
                               const std::function<TorsionPhase(std::span<const Element>)>& f) {
    Cochain c(std::move(group), degree);
    std::vector<TorsionPhase> values(c.size());
    std::vector<Element> args(degree);
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      c.unpack(idx, args);
      values[idx] = f(args);
    }
    c.assign(values);
    return c;
  }

  static Cochain from_values(GroupPtr group, std::size_t degree, const std::vector<TorsionPhase>& values) {
    Cochain c(std::move(group), degree);
    if (values.size() != c.size()) throw DomainError("cochain value table has the wrong size");
    c.assign(values);
    return c;
  }

  /// From residues r_i / modulus (any modulus in range; reduced on construction).
  static Cochain from_residues(GroupPtr group, std::size_t degree, std::uint64_t modulus, std::vector<std::uint64_t> residues) {
    Cochain c(std::move(group), degree);
    if (residues.size() != c.size()) throw DomainError("cochain value table has the wrong size");
    if (modulus == 0 || modulus > kMaxModulus) throw SizeError("cochain modulus out of range");
    for (auto& r : residues) r %= modulus;
    c.modulus_ = modulus;
    c.residues_ = std::move(residues);
    c.check_normalized();
    c.canonicalize();
    return c;
  }

  static std::size_t tuple_count(const FiniteGroup& g, std::size_t degree) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < degree; ++i) {
      if (n > (std::size_t{1} << 26) / g.order()) throw SizeError("cochain table too large");
      n *= g.order();
    }
    return n;
  }

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return residues_.size(); }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t residue(std::size_t index) const { return residues_[index]; }
  const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }

  TorsionPhase value(std::size_t index) const {
    return TorsionPhase(Rational(BigInt(residues_[index]), BigInt(modulus_)));
  }
  TorsionPhase operator()(std::span<const Element> args) const { return value(index_of(args)); }
  TorsionPhase operator()(std::initializer_list<Element> args) const {
    return value(index_of(std::span<const Element>(args.begin(), args.size())));
  }

  std::size_t index_of(std::span<const Element> args) const {
    if (args.size() != degree_) throw DomainError("cochain evaluated with the wrong number of arguments");
    std::size_t idx = 0;
    for (Element a : args) {
      if (a >= group_->order()) throw DomainError("cochain argument out of range");
      idx = idx * group_->order() + a;
    }
    return idx;
  }

  void unpack(std::size_t index, std::span<Element> args) const {
    for (std::size_t i = degree_; i-- > 0;) {
      args[i] = index % group_->order();
      index /= group_->order();
    }
  }

  bool is_zero() const noexcept { return modulus_ == 1; }

  /// The class order divides this; the order of the cochain as an element of the cochain group.
  std::uint64_t order() const noexcept { return modulus_; }

  Cochain operator-() const {
    Cochain out = *this;
    for (auto& r : out.residues_) r = r == 0 ? 0 : modulus_ - r;
    return out;
  }
  friend Cochain operator+(const Cochain& a, const Cochain& b) { return combine(a, b, false); }
  friend Cochain operator-(const Cochain& a, const Cochain& b) { return combine(a, b, true); }
  friend Cochain operator*(long long k, const Cochain& a) {
    Cochain out = a;
    const auto m = static_cast<long long>(a.modulus_);
    const long long kk = ((k % m) + m) % m;
    for (auto& r : out.residues_) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * kk) % a.modulus_);
    out.canonicalize();
    return out;
  }

  /// Same group (by table), degree and values.
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && (a.group_ == b.group_ || *a.group_ == *b.group_) && a.modulus_ == b.modulus_ &&
           a.residues_ == b.residues_;
  }

 private:
  void assign(const std::vector<TorsionPhase>& values) {
    BigInt m = 1;
    for (const auto& v : values) m = tdl::lcm(m, v.order());
    if (m > kMaxModulus) throw SizeError("cochain values need a common denominator above the supported range");
    modulus_ = static_cast<std::uint64_t>(m);
    for (std::size_t i = 0; i < values.size(); ++i) {
      BigInt r = tdl::numerator(values[i].value()) * (m / tdl::denominator(values[i].value()));
      residues_[i] = static_cast<std::uint64_t>(r);
    }
    check_normalized();
    canonicalize();
  }

  void check_normalized() const {
    std::vector<Element> args(degree_);
    for (std::size_t idx = 0; idx < residues_.size(); ++idx) {
      if (residues_[idx] == 0) continue;
      unpack(idx, args);
      for (Element a : args)
        if (a == group_->identity()) {
          std::string t;
          for (Element x : args) t += (t.empty() ? "" : " ") + group_->name(x);
          throw DomainError("cochain is not normalized: nonzero value at (" + t + ")");
        }
    }
  }

  void canonicalize() {
    std::uint64_t g = modulus_;
    for (auto r : residues_) {
      if (g == 1) break;
      g = std::gcd(g, r);
    }
    if (g == 1) return;
    modulus_ /= g;
    for (auto& r : residues_) r /= g;
  }

  static Cochain combine(const Cochain& a, const Cochain& b, bool subtract) {
    if (a.degree_ != b.degree_ || !(a.group_ == b.group_ || *a.group_ == *b.group_))
      throw DomainError("cochains live on different groups or degrees");
    const std::uint64_t m = std::lcm(a.modulus_, b.modulus_);
    if (m > kMaxModulus) throw SizeError("cochain modulus out of range");
    const std::uint64_t fa = m / a.modulus_, fb = m / b.modulus_;
    Cochain out(a.group_, a.degree_);
    out.modulus_ = m;
    for (std::size_t i = 0; i < a.residues_.size(); ++i) {
      std::uint64_t x = a.residues_[i] * fa, y = b.residues_[i] * fb;
      out.residues_[i] = subtract ? (x + m - y) % m : (x + y) % m;
    }
    out.canonicalize();
    return out;
  }

  GroupPtr group_;
  std::size_t degree_;
  std::uint64_t modulus_ = 1;
  std::vector<std::uint64_t> residues_;
};

/// Standard alternating bar differential with trivial action:
/// (dc)(g1..g_{n+1}) = c(g2..g_{n+1}) + sum_i (-1)^i c(..g_i g_{i+1}..) + (-1)^{n+1} c(g1..g_n).
inline Cochain coboundary(const Cochain& c) {
  const FiniteGroup& g = *c.group();
  const std::size_t n = c.degree();
  const std::size_t order = g.order();
  const std::uint64_t m = c.modulus();
  std::vector<std::uint64_t> out(Cochain::tuple_count(g, n + 1), 0);
  if (m == 1) return Cochain::from_residues(c.group(), n + 1, 1, std::move(out));
  std::vector<Cochain::Element> args(n + 1), sub(n);
  auto index = [&](const std::vector<Cochain::Element>& t) {
    std::size_t idx = 0;
    for (auto a : t) idx = idx * order + a;
    return idx;
  };
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = n + 1; i-- > 0;) {
      args[i] = rest % order;
      rest /= order;
    }
    std::uint64_t acc = 0;
    auto add = [&](std::uint64_t r, bool negative) { acc = negative ? (acc + m - r) % m : (acc + r) % m; };
    for (std::size_t i = 0; i < n; ++i) sub[i] = args[i + 1];
    add(c.residue(index(sub)), false);
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < n + 1; ++j) {
        if (j + 1 == i) {
          sub[k++] = g.mul(args[j], args[j + 1]);
          ++j;
        } else {
          sub[k++] = args[j];
        }
      }
      add(c.residue(index(sub)), i % 2 == 1);
    }
    for (std::size_t i = 0; i < n; ++i) sub[i] = args[i];
    add(c.residue(index(sub)), (n + 1) % 2 == 1);
    out[idx] = acc;
  }
  return Cochain::from_residues(c.group(), n + 1, m, std::move(out));
}

inline bool is_cocycle(const Cochain& c) { return coboundary(c).is_zero(); }

/// Pullback along the inclusion of a subgroup.
inline Cochain restrict(const Cochain& c, const SubgroupEmbedding& e) {
  if (!(e.parent() == c.group() || *e.parent() == *c.group()))
    throw DomainError("embedding does not land in the cochain's group");
  const std::size_t n = c.degree();
  std::vector<Cochain::Element> args(n), image(n);
  std::vector<std::uint64_t> residues(Cochain::tuple_count(*e.subgroup(), n));
  Cochain shape(e.subgroup(), n);
  for (std::size_t idx = 0; idx < residues.size(); ++idx) {
    shape.unpack(idx, args);
    for (std::size_t i = 0; i < n; ++i) image[i] = e(args[i]);
    residues[idx] = c.residue(c.index_of(image));
  }
  return Cochain::from_residues(e.subgroup(), n, c.modulus(), std::move(residues));
}

}  // namespace tdl
