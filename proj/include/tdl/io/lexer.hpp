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

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tdl::io {

struct Token {
  std::string text;
  std::size_t column = 0;  ///< 1-based
};

/// One non-blank line with `#` comments removed.
struct Line {
  std::size_t number = 0;  ///< 1-based
  std::string text;
  std::vector<Token> tokens;

  [[noreturn]] void fail(const std::string& what, std::size_t column = 1) const { throw ParseError(what, number, column); }
  [[noreturn]] void fail_at(const Token& t, const std::string& what) const { throw ParseError(what, number, t.column); }

  /// Text after the first occurrence of `marker` (trimmed), or fail.
  std::string_view after(std::string_view marker, std::size_t* column = nullptr) const {
    const auto pos = text.find(marker);
    if (pos == std::string::npos) fail("expected '" + std::string(marker) + "'");
    std::size_t start = pos + marker.size();
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    std::size_t end = text.size();
    while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (column) *column = start + 1;
    return std::string_view(text).substr(start, end - start);
  }
};

inline std::vector<Line> split_lines(std::string_view input, std::size_t first_line = 1) {
  std::vector<Line> out;
  std::size_t number = first_line;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    std::size_t end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    std::string raw(input.substr(pos, end - pos));
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, raw, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    ++number;
    if (end == input.size()) break;
    pos = end + 1;
  }
  return out;
}

/// Nonnegative decimal integer token, bounded by `max`.
inline std::uint64_t parse_count(const Line& line, const Token& t, std::uint64_t max, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) line.fail_at(t, "expected " + what + ", got '" + t.text + "'");
  if (v > max) line.fail_at(t, what + " " + t.text + " exceeds the limit " + std::to_string(max));
  return v;
}

inline void expect_tokens(const Line& line, std::size_t n, const std::string& shape) {
  if (line.tokens.size() != n) line.fail("expected '" + shape + "'");
}

}  // namespace tdl::io
