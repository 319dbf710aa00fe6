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

#include "printers.hpp"
#include "tdl/cohomology.hpp"
#include "tdl/frobenius.hpp"
#include "tdl/fusion.hpp"
#include "tdl/groups.hpp"
#include "tdl/io.hpp"
#include "tdl/statesum.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

namespace tdl {

void PrintTo(const FiniteGroup& g, std::ostream* os) { *os << "\n" << io::to_text(g); }
void PrintTo(const FusionRing& r, std::ostream* os) { *os << "\n" << io::to_text(r); }
void PrintTo(const Algebra& a, std::ostream* os) { *os << "\n" << io::to_text(a); }
void PrintTo(const Surface& s, std::ostream* os) { *os << "\n" << io::to_text(s); }

namespace {

const std::filesystem::path kData = TDL_DATA_DIR;

std::vector<GroupPtr> sample_groups() {
  return {groups::cyclic(1), groups::cyclic(2), groups::cyclic(5), groups::klein_four(), groups::symmetric(3),
          groups::dihedral(4), groups::product(*groups::cyclic(2), *groups::cyclic(4))};
}

FusionRing ising_ring() {
  std::vector<std::size_t> n(27, 0);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { n[(i * 3 + j) * 3 + k] = 1; };
  for (std::size_t x = 0; x < 3; ++x) set(0, x, x), set(x, 0, x);
  set(1, 1, 0);
  set(1, 2, 2);
  set(2, 1, 2);
  set(2, 2, 0);
  set(2, 2, 1);
  return FusionRing({"1", "eps", "sigma"}, 0, {0, 1, 2}, n);
}

FusionRing group_ring(const GroupPtr& g, std::vector<std::string> labels = {}) {
  const std::size_t r = g->order();
  std::vector<std::size_t> n(r * r * r, 0);
  std::vector<FusionRing::Label> dual(r);
  for (std::size_t x = 0; x < r; ++x) {
    dual[x] = g->inverse(x);
    for (std::size_t y = 0; y < r; ++y) n[(x * r + y) * r + g->mul(x, y)] = 1;
  }
  return FusionRing(labels.empty() ? g->names() : labels, g->identity(), dual, n);
}

io::CochainDoc parse_cochain_text(const std::string& text, const GroupPtr& g) {
  return io::parse_cochain(io::split_lines(text), [&](const std::string&) { return g; });
}

/// Expects a ParseError at the given position whose message contains `fragment`.
template <class F>
void expect_parse_error(F&& f, std::size_t line, std::size_t column, const std::string& fragment) {
  try {
    f();
    ADD_FAILURE() << "no error, expected: " << fragment;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    if (column) EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(e.message().find(fragment), std::string::npos) << e.what();
  }
}

TEST(Lexer, CommentsAndPositions) {
  const auto lines = io::split_lines("# note\n\n  group 2   # trailing\nnames: e g\n");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].number, 3u);
  EXPECT_EQ(lines[0].tokens[0].column, 3u);
  EXPECT_EQ(lines[0].tokens[1].text, "2");
  EXPECT_EQ(lines[0].tokens[1].column, 9u);
  EXPECT_EQ(lines[1].tokens.size(), 3u);
}

TEST(GroupFormat, RoundTrip) {
  for (const auto& g : sample_groups()) {
    const auto text = io::to_text(*g);
    EXPECT_EQ(*io::parse_group(io::split_lines(text)), *g);
    EXPECT_EQ(io::to_text(*io::parse_group(io::split_lines(text))), text);
  }
  EXPECT_EQ(io::load_group(kData / "klein4.group")->table(), groups::klein_four()->table());
  EXPECT_EQ(io::load_group(kData / "s3.group")->conjugacy_classes().size(), 3u);
}

TEST(GroupFormat, Errors) {
  auto parse = [](const std::string& t) { return [t] { io::parse_group(io::split_lines(t)); }; };
  expect_parse_error(parse("group 2\nnames: e e\n0 1\n1 0\n"), 2, 10, "duplicate element name");
  // Row 1 repeats an entry: not a Latin square.
  expect_parse_error(parse("group 3\nnames: e a b\n0 1 2\n1 1 0\n2 0 1\n"), 4, 1, "");
  expect_parse_error(parse("group 2\nnames: e g\n0 1\n1 2\n"), 4, 3, "element index");
  expect_parse_error(parse("group 2\nnames: e g\n0 1\n"), 1, 1, "needs a names line");
  expect_parse_error(parse("group 65\n"), 1, 7, "exceeds the limit");
  expect_parse_error(parse("grp 2\n"), 1, 1, "expected 'group' header");
  // A Latin square that is not associative (identity row 0).
  expect_parse_error(parse("group 5\nnames: e a b c d\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"), 4, 1, "not associative");
}

TEST(CochainFormat, RoundTrip) {
  std::mt19937_64 rng(5);
  for (const auto& g : sample_groups())
    for (std::size_t degree = 1; degree <= 3; ++degree) {
      if (degree == 3 && g->order() > 6) continue;
      const auto c = Cochain::from_function(g, degree, [&](std::span<const FiniteGroup::Element> a) {
        for (auto x : a)
          if (x == g->identity()) return TorsionPhase();
        return TorsionPhase(static_cast<long long>(rng() % 12), 12);
      });
      const auto text = io::to_text(c, "g.group");
      const auto doc = parse_cochain_text(text, g);
      EXPECT_EQ(doc.cochain, c);
      EXPECT_EQ(doc.group_ref, "g.group");
    }
  const auto k4 = io::load_group(kData / "klein4.group");
  const auto tors = io::load_cochain(kData / "klein4-torsion.cochain", k4);
  EXPECT_TRUE(is_cocycle(tors.cochain));
  EXPECT_TRUE(same_class(tors.cochain, torsion_classes(k4).at(1)));
  const auto anomaly = io::load_cochain(kData / "z2-anomaly.cochain");
  EXPECT_EQ(class_order(anomaly.cochain), 2);
}

TEST(CochainFormat, Errors) {
  const auto k4 = groups::klein_four();
  const auto names = k4->names();
  auto parse = [&](const std::string& t) { return [&, t] { parse_cochain_text(t, k4); }; };
  const std::string a = names[1], b = names[2];
  expect_parse_error(parse("cochain x 2\n" + a + " zz -> 1/2\n"), 2, a.size() + 2, "unknown element 'zz'");
  expect_parse_error(parse("cochain x 2\n" + a + " " + b + " -> 1/2\n" + a + " " + b + " -> 1/4\n"), 3, 1,
                     "already given on line 2");
  expect_parse_error(parse("cochain x 2\n" + names[0] + " " + b + " -> 1/2\n"), 2, 1, "normalized");
  expect_parse_error(parse("cochain x 2\n" + a + " -> 1/2\n"), 2, 1, "element names, '->'");
  expect_parse_error(parse("cochain x 2\n" + a + " " + b + " -> half\n"), 2, 0, "expected a phase");
  expect_parse_error(parse("cochain x 5\n"), 1, 11, "exceeds the limit");
  expect_parse_error([] { io::parse_cochain(io::split_lines("cochain nowhere 1\n"), [](const std::string&) { return nullptr; }); },
                     1, 9, "unknown group reference");
}

TEST(FusionFormat, RoundTrip) {
  std::vector<FusionRing> rings = {ising_ring(), minimal_model(5, 2).ring, minimal_model(5, 4).ring, minimal_model(7, 6).ring};
  for (const auto& g : sample_groups()) rings.push_back(group_ring(g));
  for (const auto& r : rings) {
    const auto text = io::to_text(r);
    EXPECT_EQ(io::parse_fusion(io::split_lines(text)), r);
  }
  EXPECT_EQ(io::load_fusion(kData / "ising.ring"), ising_ring());
  EXPECT_FALSE(validate_ring(io::load_fusion(kData / "ising-broken.ring")).valid());
}

TEST(FusionFormat, Errors) {
  auto parse = [](const std::string& t) { return [t] { io::parse_fusion(io::split_lines(t)); }; };
  const std::string head = "fusion 2\nlabels: 1 g\nunit: 1\n";
  expect_parse_error(parse(head + "dual: 1->1\nN g g 1 = 1\n"), 1, 1, "dual");
  expect_parse_error(parse(head + "dual: 1->1 g->g\nN g g 1 = 1\nN g g 1 = 1\n"), 6, 1, "already");
  expect_parse_error(parse(head + "dual: 1->1 g->g\nN g h 1 = 1\n"), 5, 5, "unknown");
  expect_parse_error(parse("fusion 2\nunit: 1\n"), 2, 0, "");
  // Duals may be split over several 'dual:' lines.
  const auto r = io::parse_fusion(io::split_lines(head + "dual: 1->1\ndual: g->g\nN 1 1 1 = 1\nN 1 g g = 1\nN g 1 g = 1\nN g g 1 = 1\n"));
  EXPECT_EQ(r, group_ring(groups::cyclic(2), {"1", "g"}));
}

TEST(AlgebraFormat, RoundTrip) {
  const auto k4 = groups::klein_four();
  std::vector<Algebra> algebras = {Algebra::trivial(), group_algebra(groups::symmetric(3)),
                                   twisted_group_algebra(k4, torsion_classes(k4).at(1)),
                                   sandwich(group_algebra(groups::cyclic(2)), group_algebra(groups::cyclic(2)))};
  // Twists with values in cyc[8] and cyc[3].
  const auto z2z4 = groups::product(*groups::cyclic(2), *groups::cyclic(4));
  for (const auto& phi : torsion_classes(z2z4)) algebras.push_back(twisted_group_algebra(z2z4, phi));
  algebras.push_back(twisted_group_algebra(groups::cyclic(3), coboundary(Cochain::from_function(groups::cyclic(3), 1,
      [](std::span<const FiniteGroup::Element> a) { return TorsionPhase(static_cast<long long>(a[0]), 3); }))));
  for (const auto& a : algebras) {
    const auto text = io::to_text(a);
    const auto back = io::parse_algebra(io::split_lines(text));
    EXPECT_EQ(back, a);
    EXPECT_EQ(io::to_text(back), text);
  }
  for (const auto* file : {"trivial.alg", "z2-group-algebra.alg", "z3-group-algebra.alg", "klein4-twisted.alg",
                           "qi-split.alg", "s3-group-algebra.alg"})
    EXPECT_TRUE(validate_algebra(io::load_algebra(kData / file)).special_symmetric_frobenius()) << file;
  const auto s3 = io::load_algebra(kData / "s3-group-algebra.alg");
  EXPECT_EQ(center_dim(s3), 3u);
  EXPECT_EQ(evaluate(standard_surface(2), s3), Cyclotomic(Rational(9, 4)));
}

TEST(AlgebraFormat, Errors) {
  auto parse = [](const std::string& t) { return [t] { io::parse_algebra(io::split_lines(t)); }; };
  const std::string head = "algebra 2 cyc[4]\nbasis: 1 j\nunit: 1, 0\ncounit: 2, 0\n";
  expect_parse_error(parse(head + "c j j 1 = cyc[3]: z\n"), 5, 11, "does not lie in cyc[4]");
  expect_parse_error(parse(head + "c j j 1 = cyc[8]: z^2\nc j j 1 = 1\n"), 6, 1, "already given on line 5");
  expect_parse_error(parse(head + "c j k 1 = 1\n"), 5, 5, "unknown basis element 'k'");
  expect_parse_error(parse(head + "c j j 1 = 1 + \n"), 5, 0, "");
  expect_parse_error(parse("algebra 2 cyc[4]\nbasis: 1 j\nunit: 1\ncounit: 2, 0\n"), 3, 1, "comma-separated");
  expect_parse_error(parse("algebra 2 cyc[4]\nbasis: 1 j\nunit: 1, cyc[5]: z\ncounit: 2, 0\n"), 3, 10, "does not lie");
  expect_parse_error(parse("algebra 2 Q\n"), 1, 11, "cyc[N]");
  expect_parse_error(parse("algebra 2 cyc[4]\nbasis: 1 j\nunit: 1, 0\n"), 1, 0, "counit");
  // A conductor that divides the declared one is fine, and so is an equal value written in a larger field.
  EXPECT_NO_THROW(io::parse_algebra(io::split_lines(head + "c 1 1 1 = 1\nc 1 j j = 1\nc j 1 j = 1\nc j j 1 = cyc[8]: z^2\n")));
}

TEST(SurfaceFormat, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int g = 0; g <= 3; ++g) {
    Surface s = standard_surface(g);
    for (int step = 0; step < 20; ++step) {
      const auto text = io::to_text(s);
      EXPECT_EQ(io::parse_surface(io::split_lines(text)), s);
      const auto opts = applicable_moves(s, 16);
      s = apply_move(s, opts[0].empty() ? Move(BubbleInsert{0}) : opts[0][rng() % opts[0].size()]);
    }
  }
  EXPECT_EQ(io::load_surface(kData / "sphere.surf").genus(), 0);
  EXPECT_EQ(io::load_surface(kData / "torus.surf").genus(), 1);
  EXPECT_EQ(io::load_surface(kData / "genus2.surf").genus(), 2);
  EXPECT_TRUE(equivalent(io::load_surface(kData / "torus-reversed.surf"), io::load_surface(kData / "torus.surf")));
  EXPECT_TRUE(equivalent(io::load_surface(kData / "torus.surf"), standard_surface(1)));
}

TEST(SurfaceFormat, Errors) {
  auto parse = [](const std::string& t) { return [t] { io::parse_surface(io::split_lines(t)); }; };
  expect_parse_error(parse("surface 2\ntri a b c\ntri a b a\n"), 3, 9, "used more than twice");
  expect_parse_error(parse("surface 2\ntri a b c\ntri a b d\n"), 2, 9, "edge 'c' used only once");
  expect_parse_error(parse("surface 2\ntri a b c\ntri a b c\nreversed a\n"), 3, 0, "not orientable");
  expect_parse_error(parse("surface 2\ntri a b c\n"), 1, 1, "expected 2 triangles, found 1");
  expect_parse_error(parse("surface 1\ntri a b c\ntri a b c\n"), 3, 1, "more than 1 triangles");
  expect_parse_error(parse("surface 2\ntri a b c\ntri a b c\nreversed z\n"), 4, 10, "unknown edge 'z'");
  expect_parse_error(parse("surface 2\ntri a b\n"), 2, 1, "tri <a> <b> <c>");
  expect_parse_error(parse("surface 2\nquad a b c d\n"), 2, 1, "unexpected 'quad'");
  // Two spheres side by side.
  expect_parse_error(parse("surface 4\ntri a a b\ntri b c c\ntri d d e\ntri e f f\n"), 1, 0, "not connected");
  // The torus written with the second triangle reversed parses to the same surface.
  EXPECT_EQ(io::parse_surface(io::split_lines("surface 2\ntri a b d\ntri d b a\nreversed a\nreversed b\nreversed d\n")),
            io::parse_surface(io::split_lines("surface 2\ntri a b d\ntri a b d\n")));
}

TEST(MachineBlock, RoundTrip) {
  const auto k4 = groups::klein_four();
  const auto z2 = groups::cyclic(2);
  io::MachineBlock block;
  block.documents.emplace_back(k4);
  block.documents.emplace_back(z2);
  block.documents.emplace_back(io::CochainDoc{"@0", torsion_classes(k4).at(1)});
  block.documents.emplace_back(io::CochainDoc{"@1", cohomology(z2, 3).generators.at(0)});
  block.documents.emplace_back(ising_ring());
  block.documents.emplace_back(twisted_group_algebra(k4, torsion_classes(k4).at(1)));
  block.documents.emplace_back(standard_surface(2));
  block.documents.emplace_back(io::ValueDoc{"S[1,2]", minimal_model(4, 3).s(0, 1)});
  block.documents.emplace_back(io::ValueDoc{"half", Cyclotomic(Rational(-1, 2))});
  block.documents.emplace_back(io::ListDoc{"factors", {"2", "2"}});
  block.documents.emplace_back(io::ListDoc{"empty", {}});
  const auto text = "preamble that is ignored\n" + io::to_text(block) + "more text\n" + io::to_text(block);
  const auto parsed = io::parse_blocks(text);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0], block);
  EXPECT_EQ(parsed[1], block);
  EXPECT_EQ(io::to_text(parsed[0]), io::to_text(block));
  const auto& c = std::get<io::CochainDoc>(parsed[0].documents[3]);
  EXPECT_EQ(c.group_ref, "@1");
  EXPECT_EQ(*c.cochain.group(), *z2);
}

TEST(MachineBlock, Errors) {
  expect_parse_error([] { io::parse_blocks("---begin\nvalue x = 1\n"); }, 1, 0, "without '---end'");
  expect_parse_error([] { io::parse_blocks("x\n---end\n"); }, 2, 0, "without '---begin'");
  expect_parse_error([] { io::parse_blocks("---begin\ncochain @0 1\n---end\n"); }, 2, 0, "no group document @0");
  expect_parse_error([] { io::parse_blocks("---begin\ncochain g.group 1\n---end\n"); }, 2, 9, "@k");
  expect_parse_error([] { io::parse_blocks("---begin\nhello\n---end\n"); }, 2, 1, "expected a document header");
  expect_parse_error([] { io::parse_blocks("---begin\nvalue x = cyc[2: 1\n---end\n"); }, 2, 0, "");
  io::MachineBlock orphan;
  orphan.documents.emplace_back(io::CochainDoc{"@0", Cochain(groups::cyclic(2), 1)});
  EXPECT_THROW(io::to_text(orphan), DomainError);
}

TEST(Files, ErrorsNameThePath) {
  const auto dir = std::filesystem::temp_directory_path() / "tdl_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "bad.surf";
  std::ofstream(path) << "# comment\nsurface 2\ntri a b c\ntri a b a\n";
  try {
    io::load_surface(path);
    ADD_FAILURE() << "expected a FileError";
  } catch (const io::FileError& e) {
    EXPECT_EQ(e.path(), path.string());
    EXPECT_EQ(std::string(e.what()), path.string() + ":4:9: edge 'a' used more than twice");
  }
  EXPECT_THROW(io::load_group(dir / "missing.group"), ParseError);
  // The cochain's group reference resolves next to the cochain file, and a mismatching group is rejected.
  std::ofstream(dir / "g.group") << io::to_text(*groups::cyclic(2));
  std::ofstream(dir / "c.cochain") << "cochain g.group 1\n" << groups::cyclic(2)->name(1) << " -> 1/2\n";
  EXPECT_EQ(io::load_cochain(dir / "c.cochain").cochain.value(1), TorsionPhase(1, 2));
  try {
    io::load_cochain(dir / "c.cochain", groups::cyclic(3));
    ADD_FAILURE() << "expected a FileError";
  } catch (const io::FileError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 9u);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace tdl
