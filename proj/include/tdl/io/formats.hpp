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
#include "tdl/exactnum/cyclotomic_io.hpp"
#include "tdl/frobenius/algebra.hpp"
#include "tdl/fusion/ring.hpp"
#include "tdl/groups/finite_group.hpp"
#include "tdl/io/lexer.hpp"
#include "tdl/statesum/surface.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <array>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdl::io {

/// Largest sizes accepted from text.
inline constexpr std::uint64_t kMaxGroupOrder = 64;
inline constexpr std::uint64_t kMaxRank = 64;
inline constexpr std::uint64_t kMaxAlgebraDim = 255;
inline constexpr std::uint64_t kMaxTriangles = 4096;

namespace detail {

inline const Line& header(std::span<const Line> lines, std::string_view keyword) {
  if (lines.empty()) throw ParseError("empty input, expected '" + std::string(keyword) + "'", 1, 1);
  const Line& h = lines.front();
  if (h.tokens[0].text != keyword) h.fail("expected '" + std::string(keyword) + "' header, got '" + h.tokens[0].text + "'");
  return h;
}

/// Cyclotomic literal starting at `column` of `line`, with positions mapped back into the line.
inline Cyclotomic literal(const Line& line, std::string_view text, std::size_t column, std::uint32_t conductor = 1) {
  try {
    return parse_cyclotomic(text, conductor);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line.number,
                     column + (e.column() == 0 ? 0 : e.column() - 1));
  }
}

/// A rational or cyclotomic written compactly: bare rational when rational, otherwise the minimal-conductor literal.
inline std::string compact(const Cyclotomic& x) {
  if (x.is_rational()) return to_string(x.rational_value());
  return to_string(x.minimized());
}

inline std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view text, std::size_t column) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::size_t first = start;
    while (first < end && (text[first] == ' ' || text[first] == '\t')) ++first;
    out.emplace_back(text.substr(first, end - first), column + first);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace detail

// ---- groups -------------------------------------------------------------------------------------------------

/// `group n`, `names: ...`, then n rows of n element indices.
inline GroupPtr parse_group(std::span<const Line> lines) {
  const Line& h = detail::header(lines, "group");
  expect_tokens(h, 2, "group <n>");
  const std::size_t n = parse_count(h, h.tokens[1], kMaxGroupOrder, "group order");
  if (n == 0) h.fail_at(h.tokens[1], "group order must be positive");
  if (lines.size() < 2 + n) h.fail("group of order " + std::to_string(n) + " needs a names line and " + std::to_string(n) + " rows");
  if (lines.size() > 2 + n) lines[2 + n].fail("unexpected line after the Cayley table");
  const Line& names_line = lines[1];
  if (names_line.tokens[0].text != "names:") names_line.fail("expected 'names:'");
  if (names_line.tokens.size() != n + 1) names_line.fail("expected " + std::to_string(n) + " element names");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& t = names_line.tokens[i];
    for (const auto& prev : names)
      if (prev == t.text) names_line.fail_at(t, "duplicate element name '" + t.text + "'");
    names.push_back(t.text);
  }
  std::vector<FiniteGroup::Element> table;
  for (std::size_t r = 0; r < n; ++r) {
    const Line& row = lines[2 + r];
    if (row.tokens.size() != n) row.fail("expected " + std::to_string(n) + " entries in Cayley row " + std::to_string(r));
    for (const auto& t : row.tokens) table.push_back(parse_count(row, t, n - 1, "element index"));
  }
  try {
    return std::make_shared<const FiniteGroup>(std::move(names), std::move(table));
  } catch (const GroupTableError& e) {
    lines[2 + e.witness()[0]].fail(e.what());
  }
}

inline std::string to_text(const FiniteGroup& g) {
  std::string out = "group " + std::to_string(g.order()) + "\nnames:";
  for (const auto& n : g.names()) out += " " + n;
  out += "\n";
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) out += (b ? " " : "") + std::to_string(g.mul(a, b));
    out += "\n";
  }
  return out;
}

// ---- cochains -----------------------------------------------------------------------------------------------

/// Resolves the group reference of a cochain header (a path or `@k`).
using GroupResolver = std::function<GroupPtr(const std::string& ref)>;

struct CochainDoc {
  std::string group_ref;
  Cochain cochain;
  friend bool operator==(const CochainDoc&, const CochainDoc&) = default;
};

/// `cochain <group-ref> <degree>`, then lines `g1 .. gn -> p/q` (missing tuples are 0).
inline CochainDoc parse_cochain(std::span<const Line> lines, const GroupResolver& resolve) {
  const Line& h = detail::header(lines, "cochain");
  expect_tokens(h, 3, "cochain <group-ref> <degree>");
  const std::size_t degree = parse_count(h, h.tokens[2], 4, "degree");
  GroupPtr g;
  try {
    g = resolve(h.tokens[1].text);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    h.fail_at(h.tokens[1], e.what());
  }
  if (!g) h.fail_at(h.tokens[1], "unknown group reference '" + h.tokens[1].text + "'");
  Cochain shape(g, degree);
  std::vector<TorsionPhase> values(shape.size());
  std::vector<std::size_t> defined_at(shape.size(), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != degree + 2 || l.tokens[degree].text != "->")
      l.fail("expected " + std::to_string(degree) + " element names, '->' and a phase");
    std::vector<FiniteGroup::Element> args;
    for (std::size_t k = 0; k < degree; ++k) {
      auto e = g->find(l.tokens[k].text);
      if (!e) l.fail_at(l.tokens[k], "unknown element '" + l.tokens[k].text + "'");
      args.push_back(*e);
    }
    const auto& vt = l.tokens[degree + 1];
    auto q = parse_rational(vt.text);
    if (!q) l.fail_at(vt, "expected a phase p/q, got '" + vt.text + "'");
    const std::size_t idx = shape.index_of(args);
    if (defined_at[idx]) l.fail("value already given on line " + std::to_string(defined_at[idx]));
    defined_at[idx] = l.number;
    const TorsionPhase phase(*q);
    bool has_identity = false;
    for (auto a : args) has_identity = has_identity || a == g->identity();
    if (has_identity && !phase.is_zero()) l.fail("nonzero value on a tuple containing the identity (cochains are normalized)");
    values[idx] = phase;
  }
  try {
    return {h.tokens[1].text, Cochain::from_values(g, degree, values)};
  } catch (const SizeError& e) {
    h.fail(e.what());
  }
}

inline std::string to_text(const Cochain& c, const std::string& group_ref) {
  std::string out = "cochain " + group_ref + " " + std::to_string(c.degree()) + "\n";
  std::vector<FiniteGroup::Element> args(c.degree());
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (c.residue(idx) == 0) continue;
    c.unpack(idx, args);
    for (auto a : args) out += c.group()->name(a) + " ";
    out += "-> " + to_string(c.value(idx)) + "\n";
  }
  return out;
}

// ---- fusion rings -------------------------------------------------------------------------------------------

/// `fusion n`, `labels: ...`, `unit: x`, `dual: a->b ...` (any number of lines), `N a b c = m` (missing are 0).
inline FusionRing parse_fusion(std::span<const Line> lines) {
  const Line& h = detail::header(lines, "fusion");
  expect_tokens(h, 2, "fusion <n>");
  const std::size_t n = parse_count(h, h.tokens[1], kMaxRank, "rank");
  if (n == 0) h.fail_at(h.tokens[1], "rank must be positive");
  std::vector<std::string> labels;
  std::optional<std::size_t> unit;
  std::vector<std::optional<std::size_t>> dual(n);
  std::vector<std::size_t> table(n * n * n, 0);
  std::map<std::array<std::size_t, 3>, std::size_t> seen;
  auto label_of = [&](const Line& l, const Token& t) -> std::size_t {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == t.text) return i;
    l.fail_at(t, labels.empty() ? "labels must be declared before use" : "unknown label '" + t.text + "'");
  };
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const std::string& key = l.tokens[0].text;
    if (key == "labels:") {
      if (!labels.empty()) l.fail("labels declared twice");
      if (l.tokens.size() != n + 1) l.fail("expected " + std::to_string(n) + " labels");
      for (std::size_t i = 1; i <= n; ++i) {
        for (const auto& prev : labels)
          if (prev == l.tokens[i].text) l.fail_at(l.tokens[i], "duplicate label '" + l.tokens[i].text + "'");
        labels.push_back(l.tokens[i].text);
      }
    } else if (key == "unit:") {
      expect_tokens(l, 2, "unit: <label>");
      if (unit) l.fail("unit declared twice");
      unit = label_of(l, l.tokens[1]);
    } else if (key == "dual:") {
      if (l.tokens.size() < 2) l.fail("expected 'dual: a->b ...'");
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        const Token& t = l.tokens[i];
        const auto arrow = t.text.find("->");
        if (arrow == std::string::npos) l.fail_at(t, "expected 'a->b'");
        const Token a{t.text.substr(0, arrow), t.column}, b{t.text.substr(arrow + 2), t.column + arrow + 2};
        const auto x = label_of(l, a), y = label_of(l, b);
        if (dual[x]) l.fail_at(t, "dual of '" + a.text + "' given twice");
        dual[x] = y;
      }
    } else if (key == "N") {
      if (l.tokens.size() != 6 || l.tokens[4].text != "=") l.fail("expected 'N a b c = m'");
      const std::array<std::size_t, 3> k{label_of(l, l.tokens[1]), label_of(l, l.tokens[2]), label_of(l, l.tokens[3])};
      if (auto it = seen.find(k); it != seen.end()) l.fail("coefficient already given on line " + std::to_string(it->second));
      seen[k] = l.number;
      table[(k[0] * n + k[1]) * n + k[2]] = parse_count(l, l.tokens[5], 1000000, "multiplicity");
    } else {
      l.fail_at(l.tokens[0], "unexpected '" + key + "' in a fusion ring");
    }
  }
  if (labels.empty()) h.fail("missing 'labels:' line");
  if (!unit) h.fail("missing 'unit:' line");
  std::vector<FusionRing::Label> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!dual[i]) h.fail("missing dual of '" + labels[i] + "'");
    d[i] = *dual[i];
  }
  try {
    return FusionRing(std::move(labels), *unit, std::move(d), std::move(table));
  } catch (const DomainError& e) {
    h.fail(e.what());
  }
}

inline std::string to_text(const FusionRing& r) {
  std::string out = "fusion " + std::to_string(r.rank()) + "\nlabels:";
  for (const auto& l : r.labels()) out += " " + l;
  out += "\nunit: " + r.label(r.unit()) + "\ndual:";
  for (std::size_t i = 0; i < r.rank(); ++i) out += " " + r.label(i) + "->" + r.label(r.dual(i));
  out += "\n";
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < r.rank(); ++j)
      for (std::size_t k = 0; k < r.rank(); ++k)
        if (r.n(i, j, k))
          out += "N " + r.label(i) + " " + r.label(j) + " " + r.label(k) + " = " + std::to_string(r.n(i, j, k)) + "\n";
  return out;
}

// ---- algebras -----------------------------------------------------------------------------------------------

/// `algebra d cyc[N]`, `basis: ...`, `unit: x1, ..., xd`, `counit: ...`, `c i j k = <literal>` (missing are 0).
/// Literals without a `cyc[..]:` prefix are read in conductor N; every literal must lie in Q(zeta_N).
inline Algebra parse_algebra(std::span<const Line> lines) {
  const Line& h = detail::header(lines, "algebra");
  expect_tokens(h, 3, "algebra <d> cyc[N]");
  const std::size_t d = parse_count(h, h.tokens[1], kMaxAlgebraDim, "dimension");
  if (d == 0) h.fail_at(h.tokens[1], "dimension must be positive");
  const Token& ct = h.tokens[2];
  if (ct.text.size() < 6 || ct.text.substr(0, 4) != "cyc[" || ct.text.back() != ']') h.fail_at(ct, "expected 'cyc[N]'");
  const Token inner{ct.text.substr(4, ct.text.size() - 5), ct.column + 4};
  const auto conductor = static_cast<std::uint32_t>(parse_count(h, inner, 100000, "conductor"));
  if (conductor == 0) h.fail_at(inner, "conductor must be positive");

  auto in_field = [&](const Line& l, std::size_t column, const Cyclotomic& x) {
    if (conductor % x.minimized().conductor() != 0)
      throw ParseError("literal does not lie in cyc[" + std::to_string(conductor) + "]", l.number, column);
  };
  std::vector<std::string> basis;
  std::optional<Vector> unit, counit;
  std::vector<Cyclotomic> c(d * d * d);
  std::map<std::array<std::size_t, 3>, std::size_t> seen;
  auto index_of = [&](const Line& l, const Token& t) -> std::size_t {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == t.text) return i;
    l.fail_at(t, basis.empty() ? "basis must be declared before use" : "unknown basis element '" + t.text + "'");
  };
  auto vector_line = [&](const Line& l, std::string_view key) {
    std::size_t column = 0;
    const auto body = l.after(key, &column);
    Vector v;
    for (auto [text, col] : detail::split_commas(body, column)) {
      v.push_back(detail::literal(l, text, col, conductor));
      in_field(l, col, v.back());
    }
    if (v.size() != d) l.fail("expected " + std::to_string(d) + " comma-separated coefficients");
    return v;
  };
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const std::string& key = l.tokens[0].text;
    if (key == "basis:") {
      if (!basis.empty()) l.fail("basis declared twice");
      if (l.tokens.size() != d + 1) l.fail("expected " + std::to_string(d) + " basis names");
      for (std::size_t i = 1; i <= d; ++i) {
        for (const auto& prev : basis)
          if (prev == l.tokens[i].text) l.fail_at(l.tokens[i], "duplicate basis name '" + l.tokens[i].text + "'");
        basis.push_back(l.tokens[i].text);
      }
    } else if (key == "unit:") {
      if (unit) l.fail("unit declared twice");
      unit = vector_line(l, "unit:");
    } else if (key == "counit:") {
      if (counit) l.fail("counit declared twice");
      counit = vector_line(l, "counit:");
    } else if (key == "c") {
      if (l.tokens.size() < 6 || l.tokens[4].text != "=") l.fail("expected 'c i j k = <literal>'");
      const std::array<std::size_t, 3> k{index_of(l, l.tokens[1]), index_of(l, l.tokens[2]), index_of(l, l.tokens[3])};
      if (auto it = seen.find(k); it != seen.end()) l.fail("coefficient already given on line " + std::to_string(it->second));
      seen[k] = l.number;
      std::size_t column = 0;
      const auto body = l.after("=", &column);
      auto& slot = c[(k[0] * d + k[1]) * d + k[2]];
      slot = detail::literal(l, body, column, conductor);
      in_field(l, column, slot);
    } else {
      l.fail_at(l.tokens[0], "unexpected '" + key + "' in an algebra");
    }
  }
  if (basis.empty()) h.fail("missing 'basis:' line");
  if (!unit) h.fail("missing 'unit:' line");
  if (!counit) h.fail("missing 'counit:' line");
  try {
    return Algebra(std::move(basis), std::move(c), std::move(*unit), std::move(*counit));
  } catch (const DomainError& e) {
    h.fail(e.what());
  }
}

inline std::string to_text(const Algebra& a) {
  const std::size_t d = a.dim();
  std::string out = "algebra " + std::to_string(d) + " cyc[" + std::to_string(a.conductor()) + "]\nbasis:";
  for (const auto& b : a.basis()) out += " " + b;
  auto vec = [&](const Vector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : " ") + detail::compact(v[i]);
    return s;
  };
  out += "\nunit:" + vec(a.unit()) + "\ncounit:" + vec(a.counit()) + "\n";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.terms(i, j))
        out += "c " + a.basis()[i] + " " + a.basis()[j] + " " + a.basis()[t.k] + " = " + detail::compact(t.value) + "\n";
  return out;
}

// ---- surfaces -----------------------------------------------------------------------------------------------

/// `surface T`, T lines `tri a b c` naming edges, optional `reversed <label>` lines. Each label names exactly two
/// sides; by default the two sides are traversed in opposite directions, `reversed` marks a gluing traversed in the
/// same direction. Triangles are re-oriented consistently; non-orientable input is rejected.
inline Surface parse_surface(std::span<const Line> lines) {
  const Line& h = detail::header(lines, "surface");
  expect_tokens(h, 2, "surface <T>");
  const std::size_t n = parse_count(h, h.tokens[1], kMaxTriangles, "triangle count");
  if (n == 0) h.fail_at(h.tokens[1], "a surface needs triangles");
  struct Use {
    std::size_t slot;
    const Line* line;
    const Token* token;
  };
  std::map<std::string, std::vector<Use>> uses;
  std::map<std::string, const Line*> reversed;
  std::vector<const Line*> tri_lines;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    if (l.tokens[0].text == "tri") {
      expect_tokens(l, 4, "tri <a> <b> <c>");
      if (tri_lines.size() == n) l.fail("more than " + std::to_string(n) + " triangles");
      for (std::size_t i = 0; i < 3; ++i) {
        auto& u = uses[l.tokens[i + 1].text];
        if (u.size() == 2) l.fail_at(l.tokens[i + 1], "edge '" + l.tokens[i + 1].text + "' used more than twice");
        u.push_back({3 * tri_lines.size() + i, &l, &l.tokens[i + 1]});
      }
      tri_lines.push_back(&l);
    } else if (l.tokens[0].text == "reversed") {
      expect_tokens(l, 2, "reversed <label>");
      if (reversed.count(l.tokens[1].text)) l.fail_at(l.tokens[1], "edge marked reversed twice");
      reversed[l.tokens[1].text] = &l;
    } else {
      l.fail_at(l.tokens[0], "unexpected '" + l.tokens[0].text + "' in a surface");
    }
  }
  if (tri_lines.size() != n) h.fail("expected " + std::to_string(n) + " triangles, found " + std::to_string(tri_lines.size()));
  for (const auto& [label, u] : uses)
    if (u.size() != 2) u[0].line->fail_at(*u[0].token, "edge '" + label + "' used only once");
  for (const auto& [label, l] : reversed)
    if (!uses.count(label)) l->fail_at(l->tokens[1], "unknown edge '" + label + "'");

  // Orientation parity per triangle: a plain gluing needs equal parity, a reversed one opposite parity.
  std::vector<int> parity(n, -1);
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  std::map<std::pair<std::size_t, std::size_t>, std::pair<const Line*, const Token*>> where;
  for (const auto& [label, u] : uses) {
    const int flip = reversed.count(label) ? 1 : 0;
    const std::size_t a = u[0].slot / 3, b = u[1].slot / 3;
    if (a == b && flip) u[1].line->fail_at(*u[1].token, "surface is not orientable (edge '" + label + "')");
    adj[a].push_back({b, flip});
    adj[b].push_back({a, flip});
    where[{std::min(a, b), std::max(a, b)}] = {u[1].line, u[1].token};
  }
  for (std::size_t start = 0; start < n; ++start) {
    if (parity[start] != -1) continue;
    parity[start] = 0;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t t = stack.back();
      stack.pop_back();
      for (auto [u, flip] : adj[t]) {
        const int want = parity[t] ^ flip;
        if (parity[u] == -1) {
          parity[u] = want;
          stack.push_back(u);
        } else if (parity[u] != want) {
          const auto [l, tok] = where.at({std::min(t, u), std::max(t, u)});
          l->fail_at(*tok, "surface is not orientable");
        }
      }
    }
  }
  // A reversed triangle (s0, s1, s2) becomes (s2, s1, s0).
  auto position = [&](std::size_t slot) {
    const std::size_t t = slot / 3, i = slot % 3;
    return parity[t] ? 3 * t + (2 - i) : slot;
  };
  std::vector<Surface::Slot> partner(3 * n);
  for (const auto& [label, u] : uses) {
    partner[position(u[0].slot)] = position(u[1].slot);
    partner[position(u[1].slot)] = position(u[0].slot);
  }
  try {
    return Surface(std::move(partner));
  } catch (const DomainError& e) {
    h.fail(e.what());
  }
}

inline std::string to_text(const Surface& s) {
  std::vector<std::size_t> edge_of(s.slot_count());
  const auto edges = s.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) edge_of[edges[e].first] = edge_of[edges[e].second] = e;
  std::string out = "surface " + std::to_string(s.triangle_count()) + "\n";
  for (std::size_t t = 0; t < s.triangle_count(); ++t)
    out += "tri e" + std::to_string(edge_of[3 * t]) + " e" + std::to_string(edge_of[3 * t + 1]) + " e" +
           std::to_string(edge_of[3 * t + 2]) + "\n";
  return out;
}

}  // namespace tdl::io
