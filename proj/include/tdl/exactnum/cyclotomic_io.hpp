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
#include "tdl/exactnum/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace tdl {

/// `cyc[N]: c0 + c1*z + c2*z^2 + ...`; zero prints as `cyc[N]: 0`.
inline std::string to_string(const Cyclotomic& x) {
  std::string out = "cyc[" + std::to_string(x.conductor()) + "]: ";
  if (x.is_zero()) return out + "0";
  bool first = true;
  for (std::size_t k = 0; k < x.numerators().size(); ++k) {
    Rational c = x.coefficient(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (k == 0) {
      out += to_string(c);
      continue;
    }
    if (c != 1) out += to_string(c) + "*";
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << to_string(x); }

/// Parses the literal syntax above. A bare rational (`3/4`) is accepted as
/// conductor `default_conductor`. Errors carry the column within `text`.
inline Cyclotomic parse_cyclotomic(std::string_view text, std::uint32_t default_conductor = 1) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, 1, pos + 1); };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&]() -> std::uint64_t {
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (1ull << 40)) throw fail("integer too large");
      ++pos;
    }
    if (pos == start) throw fail("expected digits");
    return v;
  };

  std::uint32_t conductor = default_conductor;
  skip_ws();
  if (text.substr(pos, 4) == "cyc[") {
    pos += 4;
    std::uint64_t n = read_uint();
    if (n == 0 || n > 100000) throw fail("conductor out of range");
    conductor = static_cast<std::uint32_t>(n);
    if (pos >= text.size() || text[pos] != ']') throw fail("expected ']'");
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != ':') throw fail("expected ':'");
    ++pos;
  }

  std::map<std::int64_t, Rational> terms;
  bool expect_term = true;
  bool negative = false;
  skip_ws();
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (expect_term) throw fail("expected a term");
      break;
    }
    // term := [rational ['*']] ['z' ['^' k]]
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      auto q = parse_rational(text.substr(start, pos - start));
      if (!q) {
        pos = start;
        throw fail("malformed rational");
      }
      coeff = *q;
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
        if (pos >= text.size() || text[pos] != 'z') throw fail("expected 'z' after '*'");
      }
    }
    std::int64_t exponent = 0;
    if (pos < text.size() && text[pos] == 'z') {
      ++pos;
      exponent = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        exponent = static_cast<std::int64_t>(read_uint());
      }
    } else if (!have_coeff) {
      throw fail("expected a coefficient or 'z'");
    }
    terms[exponent] += negative ? Rational(-coeff) : coeff;
    expect_term = false;
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '+' && text[pos] != '-') throw fail("expected '+' or '-'");
    negative = text[pos] == '-';
    ++pos;
    expect_term = true;
  }
  return Cyclotomic::from_exponents(conductor, terms);
}

}  // namespace tdl
