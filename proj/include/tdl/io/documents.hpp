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
#include "tdl/io/formats.hpp"

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tdl::io {

/// `value <key> = <literal>`
struct ValueDoc {
  std::string key;
  Cyclotomic value;
  friend bool operator==(const ValueDoc&, const ValueDoc&) = default;
};

/// `list <key> = tok1 tok2 ...`
struct ListDoc {
  std::string key;
  std::vector<std::string> items;
  friend bool operator==(const ListDoc&, const ListDoc&) = default;
};

using Document = std::variant<GroupPtr, CochainDoc, FusionRing, Algebra, Surface, ValueDoc, ListDoc>;

bool same_document(const Document& a, const Document& b);

/// The documents of one `---begin` / `---end` block. In a block, cochains refer to groups as `@k`, the k-th group
/// document of the block (0-based).
struct MachineBlock {
  std::vector<Document> documents;

  friend bool operator==(const MachineBlock& a, const MachineBlock& b) {
    if (a.documents.size() != b.documents.size()) return false;
    for (std::size_t i = 0; i < a.documents.size(); ++i)
      if (!same_document(a.documents[i], b.documents[i])) return false;
    return true;
  }
};

inline constexpr std::string_view kBlockBegin = "---begin";
inline constexpr std::string_view kBlockEnd = "---end";

inline bool same_document(const Document& a, const Document& b) {
  if (a.index() != b.index()) return false;
  if (const auto* g = std::get_if<GroupPtr>(&a)) return **g == *std::get<GroupPtr>(b);
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GroupPtr>)
          return false;
        else if constexpr (std::is_same_v<T, CochainDoc>) {
          const auto& y = std::get<CochainDoc>(b);
          return x.group_ref == y.group_ref && *x.cochain.group() == *y.cochain.group() && x.cochain == y.cochain;
        } else
          return x == std::get<T>(b);
      },
      a);
}

namespace detail {

inline bool is_header(const Line& l) {
  static constexpr std::string_view kinds[] = {"group", "cochain", "fusion", "algebra", "surface", "value", "list"};
  if (l.text.find("->") != std::string::npos) return false;
  for (auto k : kinds)
    if (l.tokens[0].text == k) return true;
  return false;
}

inline ValueDoc parse_value(std::span<const Line> lines) {
  const Line& l = lines.front();
  if (lines.size() > 1) lines[1].fail("unexpected line after a value");
  if (l.tokens.size() < 4 || l.tokens[2].text != "=") l.fail("expected 'value <key> = <literal>'");
  std::size_t column = 0;
  const auto body = l.after("=", &column);
  return {l.tokens[1].text, literal(l, body, column)};
}

inline ListDoc parse_list(std::span<const Line> lines) {
  const Line& l = lines.front();
  if (lines.size() > 1) lines[1].fail("unexpected line after a list");
  if (l.tokens.size() < 3 || l.tokens[2].text != "=") l.fail("expected 'list <key> = <items>'");
  ListDoc d{l.tokens[1].text, {}};
  for (std::size_t i = 3; i < l.tokens.size(); ++i) d.items.push_back(l.tokens[i].text);
  return d;
}

}  // namespace detail

/// Parses the body of a machine block (the lines between the markers).
inline MachineBlock parse_block_body(std::span<const Line> lines) {
  MachineBlock block;
  std::vector<GroupPtr> groups;
  std::size_t start = 0;
  while (start < lines.size()) {
    if (!detail::is_header(lines[start])) lines[start].fail_at(lines[start].tokens[0], "expected a document header");
    std::size_t end = start + 1;
    while (end < lines.size() && !detail::is_header(lines[end])) ++end;
    const auto doc = lines.subspan(start, end - start);
    const std::string& kind = lines[start].tokens[0].text;
    if (kind == "group") {
      groups.push_back(parse_group(doc));
      block.documents.emplace_back(groups.back());
    } else if (kind == "cochain") {
      block.documents.emplace_back(parse_cochain(doc, [&](const std::string& ref) -> GroupPtr {
        if (ref.size() < 2 || ref[0] != '@') throw DomainError("group references in a block have the form @k");
        const Token t{ref.substr(1), lines[start].tokens[1].column + 1};
        const auto k = parse_count(lines[start], t, groups.size(), "group reference");
        if (k >= groups.size()) lines[start].fail_at(t, "no group document @" + t.text + " precedes this cochain");
        return groups[k];
      }));
    } else if (kind == "fusion") {
      block.documents.emplace_back(parse_fusion(doc));
    } else if (kind == "algebra") {
      block.documents.emplace_back(parse_algebra(doc));
    } else if (kind == "surface") {
      block.documents.emplace_back(parse_surface(doc));
    } else if (kind == "value") {
      block.documents.emplace_back(detail::parse_value(doc));
    } else {
      block.documents.emplace_back(detail::parse_list(doc));
    }
    start = end;
  }
  return block;
}

/// Every machine block in `text`, in order. Text outside blocks is ignored.
inline std::vector<MachineBlock> parse_blocks(std::string_view text) {
  std::vector<MachineBlock> out;
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size()) {
    if (lines[i].tokens.size() == 1 && lines[i].tokens[0].text == kBlockEnd) lines[i].fail("'---end' without '---begin'");
    if (lines[i].tokens.size() != 1 || lines[i].tokens[0].text != kBlockBegin) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < lines.size() && !(lines[j].tokens.size() == 1 && lines[j].tokens[0].text == kBlockEnd)) ++j;
    if (j == lines.size()) lines[i].fail("'---begin' without '---end'");
    out.push_back(parse_block_body(std::span(lines).subspan(i + 1, j - i - 1)));
    i = j + 1;
  }
  return out;
}

/// Prints a block; cochains are printed against the `@k` of their group, which must appear earlier in the block.
inline std::string to_text(const MachineBlock& block) {
  std::string out = std::string(kBlockBegin) + "\n";
  std::vector<GroupPtr> groups;
  for (const auto& doc : block.documents) {
    if (const auto* g = std::get_if<GroupPtr>(&doc)) {
      groups.push_back(*g);
      out += to_text(**g);
    } else if (const auto* c = std::get_if<CochainDoc>(&doc)) {
      std::size_t k = 0;
      while (k < groups.size() && groups[k] != c->cochain.group() && !(*groups[k] == *c->cochain.group())) ++k;
      if (k == groups.size()) throw DomainError("cochain printed before its group");
      out += to_text(c->cochain, "@" + std::to_string(k));
    } else if (const auto* r = std::get_if<FusionRing>(&doc)) {
      out += to_text(*r);
    } else if (const auto* a = std::get_if<Algebra>(&doc)) {
      out += to_text(*a);
    } else if (const auto* s = std::get_if<Surface>(&doc)) {
      out += to_text(*s);
    } else if (const auto* v = std::get_if<ValueDoc>(&doc)) {
      out += "value " + v->key + " = " + to_string(v->value.minimized()) + "\n";
    } else if (const auto* l = std::get_if<ListDoc>(&doc)) {
      out += "list " + l->key + " =";
      for (const auto& item : l->items) out += " " + item;
      out += "\n";
    }
  }
  return out + std::string(kBlockEnd) + "\n";
}

// ---- files ----------------------------------------------------------------------------------------------------

/// A parse failure inside a named file.
class FileError : public ParseError {
 public:
  FileError(const std::string& path, const ParseError& e) : ParseError(e.message(), e.line(), e.column()), path_(path) {
    full_ = path + ":" + (e.line() ? std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " : " ") + e.message();
  }
  const char* what() const noexcept override { return full_.c_str(); }
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
  std::string full_;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto parse_file(const std::filesystem::path& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(split_lines(text));
  } catch (const FileError&) {
    throw;
  } catch (const ParseError& e) {
    throw FileError(path.string(), e);
  }
}

inline GroupPtr load_group(const std::filesystem::path& path) {
  return parse_file(path, [](const std::vector<Line>& l) { return parse_group(l); });
}
inline FusionRing load_fusion(const std::filesystem::path& path) {
  return parse_file(path, [](const std::vector<Line>& l) { return parse_fusion(l); });
}
inline Algebra load_algebra(const std::filesystem::path& path) {
  return parse_file(path, [](const std::vector<Line>& l) { return parse_algebra(l); });
}
inline Surface load_surface(const std::filesystem::path& path) {
  return parse_file(path, [](const std::vector<Line>& l) { return parse_surface(l); });
}

/// Loads a cochain; its group reference is a path relative to the cochain file. When `expected` is given the
/// referenced group must equal it.
inline CochainDoc load_cochain(const std::filesystem::path& path, GroupPtr expected = nullptr) {
  return parse_file(path, [&](const std::vector<Line>& l) {
    return parse_cochain(l, [&](const std::string& ref) -> GroupPtr {
      const auto group_path = path.parent_path() / ref;
      GroupPtr g = load_group(group_path);
      if (expected && !(*g == *expected)) throw DomainError("group file '" + ref + "' differs from the given group");
      return expected ? expected : g;
    });
  });
}

/// Loads one file of the given kind: group, cochain, fusion, algebra or surface.
inline Document parse_input(const std::filesystem::path& path, std::string_view kind) {
  if (kind == "group") return load_group(path);
  if (kind == "cochain") return load_cochain(path);
  if (kind == "fusion") return load_fusion(path);
  if (kind == "algebra") return load_algebra(path);
  if (kind == "surface") return load_surface(path);
  throw ParseError("unknown input kind '" + std::string(kind) + "'");
}

}  // namespace tdl::io
