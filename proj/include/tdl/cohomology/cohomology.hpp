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

#include "tdl/cohomology/cochain.hpp"
#include "tdl/error.hpp"
#include "tdl/exactnum/smith.hpp"
#include "tdl/groups/finite_group.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tdl {

namespace detail {

/// Normalized tuples of a fixed length: tuples of non-identity elements, base-(|G|-1) digits.
class NormalizedTuples {
 public:
  NormalizedTuples(const FiniteGroup& g, std::size_t length) : order_(g.order()), length_(length) {
    digit_.assign(order_, kNone);
    for (FiniteGroup::Element a = 0; a < order_; ++a)
      if (a != g.identity()) {
        digit_[a] = elements_.size();
        elements_.push_back(a);
      }
    count_ = 1;
    for (std::size_t i = 0; i < length; ++i) count_ *= elements_.size();
  }

  std::size_t count() const noexcept { return count_; }

  void unpack(std::size_t index, std::vector<FiniteGroup::Element>& out) const {
    out.resize(length_);
    const std::size_t base = elements_.size();
    for (std::size_t i = length_; i-- > 0;) {
      out[i] = elements_[index % base];
      index /= base;
    }
  }

  /// Index of a tuple, or kNone if some entry is the identity.
  std::size_t index_of(const std::vector<FiniteGroup::Element>& t) const {
    std::size_t idx = 0;
    for (auto a : t) {
      if (digit_[a] == kNone) return kNone;
      idx = idx * elements_.size() + digit_[a];
    }
    return idx;
  }

  /// Position of the tuple in the full |G|^n table.
  std::size_t full_index(std::size_t index) const {
    std::vector<FiniteGroup::Element> t;
    unpack(index, t);
    std::size_t idx = 0;
    for (auto a : t) idx = idx * order_ + a;
    return idx;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  std::size_t order_;
  std::size_t length_;
  std::size_t count_ = 1;
  std::vector<FiniteGroup::Element> elements_;
  std::vector<std::size_t> digit_;
};

/// Matrix of the normalized bar differential from degree n to n+1 (rows: degree n+1 tuples).
template <class T>
Matrix<T> bar_matrix(const FiniteGroup& g, std::size_t n) {
  NormalizedTuples rows(g, n + 1), cols(g, n);
  Matrix<T> m(rows.count(), cols.count());
  std::vector<FiniteGroup::Element> args, sub(n);
  for (std::size_t r = 0; r < rows.count(); ++r) {
    rows.unpack(r, args);
    auto add = [&](int sign) {
      const std::size_t c = cols.index_of(sub);
      if (c != NormalizedTuples::kNone) m(r, c) += T(sign);
    };
    for (std::size_t i = 0; i < n; ++i) sub[i] = args[i + 1];
    add(1);
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
      add(i % 2 == 1 ? -1 : 1);
    }
    for (std::size_t i = 0; i < n; ++i) sub[i] = args[i];
    add((n + 1) % 2 == 1 ? -1 : 1);
  }
  return m;
}

inline SmithForm<BigInt> bar_smith(const FiniteGroup& g, std::size_t n, bool want_left, bool want_right) {
  try {
    auto f = smith_normal_form<CheckedInt64>(bar_matrix<CheckedInt64>(g, n), want_left, want_right);
    SmithForm<BigInt> out;
    out.left = f.left.template cast<BigInt>();
    out.diagonal = f.diagonal.template cast<BigInt>();
    out.right = f.right.template cast<BigInt>();
    out.rank = f.rank;
    return out;
  } catch (const std::overflow_error&) {
    return smith_normal_form<BigInt>(bar_matrix<BigInt>(g, n), want_left, want_right);
  }
}

/// Dense elimination on the bar matrix; bounds measured on one core to stay within seconds.
inline constexpr std::size_t kMaxBarCells = std::size_t{20'000'000};

/// Throws unless (|G|-1)^exponent cells fit; the differential into degree n+1 has exponent 2n+1.
inline void check_bar_size(const FiniteGroup& g, std::size_t n, std::size_t exponent) {
  const std::size_t k = g.order() - 1;
  std::size_t cells = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    cells *= k;
    if (cells > kMaxBarCells) break;
  }
  if (cells > kMaxBarCells)
    throw SizeError("group of order " + std::to_string(g.order()) + " is beyond the supported size for degree " +
                    std::to_string(n));
}

}  // namespace detail

/// Solves d(phi) = psi for cochains psi of a fixed degree on one group.
class CoboundarySolver {
 public:
  CoboundarySolver(GroupPtr group, std::size_t degree)
      : group_(std::move(group)), degree_(degree), rows_(*group_, degree), cols_(*group_, degree == 0 ? 0 : degree - 1) {
    if (degree == 0) throw DomainError("degree-0 cochains are never coboundaries of anything");
    // The row transform is square in the number of degree-n tuples.
    detail::check_bar_size(*group_, degree, 2 * degree);
    snf_ = detail::bar_smith(*group_, degree - 1, true, true);
  }

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return degree_; }

  std::optional<Cochain> solve(const Cochain& psi) const {
    if (psi.degree() != degree_ || !(psi.group() == group_ || psi.group()->table() == group_->table()))
      throw DomainError("cochain does not match the solver's group and degree");
    const std::uint64_t m = psi.modulus();
    const std::size_t nr = rows_.count(), nc = cols_.count();
    std::vector<BigInt> r(nr);
    for (std::size_t j = 0; j < nr; ++j) r[j] = psi.residue(rows_.full_index(j));
    std::vector<BigInt> w(nr, 0);
    for (std::size_t i = 0; i < nr; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < nr; ++j)
        if (r[j] != 0 && snf_.left(i, j) != 0) acc += snf_.left(i, j) * r[j];
      w[i] = acc;
    }
    for (std::size_t i = snf_.rank; i < nr; ++i)
      if (w[i] % m != 0) return std::nullopt;
    const BigInt dmax = snf_.rank == 0 ? BigInt(1) : snf_.diagonal(snf_.rank - 1, snf_.rank - 1);
    const BigInt big_l = BigInt(m) * dmax;
    if (big_l > Cochain::kMaxModulus) throw SizeError("coboundary solution needs too large a denominator");
    std::vector<BigInt> y(snf_.rank);
    for (std::size_t i = 0; i < snf_.rank; ++i) y[i] = w[i] * (dmax / snf_.diagonal(i, i));
    std::vector<std::uint64_t> out(Cochain::tuple_count(*group_, degree_ - 1), 0);
    for (std::size_t k = 0; k < nc; ++k) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < snf_.rank; ++i)
        if (y[i] != 0 && snf_.right(k, i) != 0) acc += snf_.right(k, i) * y[i];
      acc %= big_l;
      if (acc < 0) acc += big_l;
      out[cols_.full_index(k)] = static_cast<std::uint64_t>(acc);
    }
    return Cochain::from_residues(psi.group(), degree_ - 1, static_cast<std::uint64_t>(big_l), std::move(out));
  }

 private:
  GroupPtr group_;
  std::size_t degree_;
  detail::NormalizedTuples rows_, cols_;
  SmithForm<BigInt> snf_;
};

namespace detail {

/// Solvers are reused across calls for the same group table and degree.
inline std::shared_ptr<const CoboundarySolver> cached_solver(const GroupPtr& g, std::size_t degree) {
  using Key = std::pair<std::vector<FiniteGroup::Element>, std::size_t>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const CoboundarySolver>> cache;
  Key key{g->table(), degree};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (cache.size() >= 64) cache.clear();
  auto solver = std::make_shared<const CoboundarySolver>(g, degree);
  cache.emplace(std::move(key), solver);
  return solver;
}

}  // namespace detail

/// Some phi with coboundary(phi) == psi, or empty if psi is not a coboundary. Any degree >= 1.
inline std::optional<Cochain> solve_coboundary(const Cochain& psi) {
  if (!is_cocycle(psi)) throw DomainError("input is not a cocycle");
  return detail::cached_solver(psi.group(), psi.degree())->solve(psi);
}

inline std::optional<Cochain> trivialize(const Cochain& psi) {
  if (psi.degree() != 3) throw DomainError("trivialize expects a 3-cocycle");
  return solve_coboundary(psi);
}

inline bool same_class(const Cochain& a, const Cochain& b) {
  if (a.degree() != b.degree() || !(a.group() == b.group() || *a.group() == *b.group()))
    throw DomainError("cochains live on different groups or degrees");
  if (a.degree() == 0) throw DomainError("classes are defined for degree >= 1");
  if (!is_cocycle(a) || !is_cocycle(b)) throw DomainError("same_class expects cocycles");
  return solve_coboundary(a - b).has_value();
}

/// Order of the cohomology class of a cocycle.
inline std::uint64_t class_order(const Cochain& psi) {
  if (!is_cocycle(psi)) throw DomainError("input is not a cocycle");
  const std::uint64_t m = psi.modulus();
  for (std::uint64_t k = 1; k <= m; ++k)
    if (m % k == 0 && solve_coboundary(static_cast<long long>(k) * psi)) return k;
  return m;
}

struct CohomologyGroup {
  GroupPtr group;
  std::size_t degree = 0;
  std::vector<BigInt> invariant_factors;
  std::vector<Cochain> generators;

  BigInt order() const {
    BigInt n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
  }
  bool is_trivial() const { return invariant_factors.empty(); }
};

/// H^n(G, Q/Z) with trivial action; invariant factors d_1 | d_2 | ... (all > 1).
inline CohomologyGroup cohomology(const GroupPtr& g, std::size_t n) {
  if (n < 1 || n > 3) throw DomainError("cohomology degree must be 1, 2 or 3");
  detail::check_bar_size(*g, n, 2 * n + 1);
  const auto snf = detail::bar_smith(*g, n, false, true);
  detail::NormalizedTuples cols(*g, n);
  CohomologyGroup out;
  out.group = g;
  out.degree = n;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    const BigInt& d = snf.diagonal(i, i);
    if (d == 1) continue;
    if (d > Cochain::kMaxModulus) throw SizeError("invariant factor out of range");
    const auto dm = static_cast<std::uint64_t>(d);
    std::vector<std::uint64_t> residues(Cochain::tuple_count(*g, n), 0);
    for (std::size_t k = 0; k < cols.count(); ++k) {
      BigInt v = snf.right(k, i) % d;
      if (v < 0) v += d;
      residues[cols.full_index(k)] = static_cast<std::uint64_t>(v);
    }
    out.invariant_factors.push_back(d);
    out.generators.push_back(Cochain::from_residues(g, n, dm, std::move(residues)));
  }
  return out;
}

/// All sums sum_i k_i * generator_i, 0 <= k_i < d_i, in lexicographic order of (k_1, k_2, ...).
inline std::vector<Cochain> enumerate_classes(const CohomologyGroup& h) {
  if (h.order() > 4096) throw SizeError("too many cohomology classes to enumerate");
  std::vector<Cochain> out{Cochain(h.group, h.degree)};
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    std::vector<Cochain> next;
    for (const auto& base : out)
      for (long long k = 0; k < static_cast<long long>(h.invariant_factors[i]); ++k)
        next.push_back(base + k * h.generators[i]);
    out = std::move(next);
  }
  return out;
}

/// One degree-2 cocycle per class of H^2(H, Q/Z), the trivial class first.
inline std::vector<Cochain> torsion_classes(const GroupPtr& h) { return enumerate_classes(cohomology(h, 2)); }

/// Coordinates (k_1, k_2, ...) with psi cohomologous to sum_i k_i * generator_i.
inline std::vector<BigInt> class_coordinates(const Cochain& psi, const CohomologyGroup& h) {
  if (psi.degree() != h.degree || !(psi.group() == h.group || *psi.group() == *h.group))
    throw DomainError("cocycle does not match the cohomology group");
  if (!is_cocycle(psi)) throw DomainError("input is not a cocycle");
  std::vector<BigInt> k(h.generators.size(), 0);
  const auto classes = enumerate_classes(h);
  for (const auto& c : classes) {
    if (solve_coboundary(psi - c)) return k;
    for (std::size_t i = h.generators.size(); i-- > 0;) {
      if (++k[i] < h.invariant_factors[i]) break;
      k[i] = 0;
    }
  }
  throw Error("cocycle matched no cohomology class");
}

/// Failure of the bar cocycle identity at a 4-tuple.
class PentagonViolation : public DomainError {
 public:
  PentagonViolation(const std::string& what, std::array<FiniteGroup::Element, 4> witness)
      : DomainError(what), witness_(witness) {}
  const std::array<FiniteGroup::Element, 4>& witness() const noexcept { return witness_; }

 private:
  std::array<FiniteGroup::Element, 4> witness_;
};

using JunctionData = std::map<std::array<FiniteGroup::Element, 2>, TorsionPhase>;
using AssociatorData = std::map<std::array<FiniteGroup::Element, 3>, TorsionPhase>;

/// Associator phases plus the coboundary of the junction normalizations, checked against the
/// pentagon identity. Missing entries are zero.
inline Cochain pentagon_extract(const JunctionData& junction, const GroupPtr& g, const AssociatorData& assoc) {
  const std::size_t n = g->order();
  for (const auto& [k, v] : junction)
    if (k[0] >= n || k[1] >= n) throw DomainError("junction data names an element outside the group");
  for (const auto& [k, v] : assoc)
    if (k[0] >= n || k[1] >= n || k[2] >= n) throw DomainError("associator data names an element outside the group");
  const Cochain phi = Cochain::from_function(g, 2, [&](std::span<const FiniteGroup::Element> a) {
    auto it = junction.find({a[0], a[1]});
    return it == junction.end() ? TorsionPhase() : it->second;
  });
  const Cochain dphi = coboundary(phi);
  std::vector<TorsionPhase> raw(n * n * n);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto it = assoc.find({i / (n * n), (i / n) % n, i % n});
    raw[i] = (it == assoc.end() ? TorsionPhase() : it->second) + dphi.value(i);
  }
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> const TorsionPhase& { return raw[(a * n + b) * n + c]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const TorsionPhase lhs = at(b, c, d) + at(a, g->mul(b, c), d) + at(a, b, c);
          const TorsionPhase rhs = at(g->mul(a, b), c, d) + at(a, b, g->mul(c, d));
          if (lhs != rhs)
            throw PentagonViolation("pentagon identity fails at (" + g->name(a) + ", " + g->name(b) + ", " + g->name(c) +
                                        ", " + g->name(d) + ")",
                                    {a, b, c, d});
        }
  return Cochain::from_values(g, 3, raw);
}

}  // namespace tdl
