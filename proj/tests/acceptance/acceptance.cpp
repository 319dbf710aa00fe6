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

// One line per acceptance criterion: PASS or FAIL, the measured runtime and its limit.
// Exits nonzero if any criterion fails.

#include "oracles.hpp"
#include "tdl/cohomology.hpp"
#include "tdl/exactnum.hpp"
#include "tdl/frobenius.hpp"
#include "tdl/fusion.hpp"
#include "tdl/groups.hpp"
#include "tdl/io.hpp"
#include "tdl/statesum.hpp"
#include "tdl_cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tdl;

const std::filesystem::path kData = TDL_DATA_DIR;

/// Collects failed checks of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string note;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

std::string str(const Cyclotomic& x) { return to_string(x.minimized()); }

oracle::Table table_of(const FiniteGroup& g) { return {g.order(), g.table()}; }

Cochain random_cochain(std::mt19937_64& rng, const GroupPtr& g, std::size_t degree, long long den) {
  return Cochain::from_function(g, degree, [&](std::span<const FiniteGroup::Element> a) {
    for (auto x : a)
      if (x == g->identity()) return TorsionPhase();
    return TorsionPhase(static_cast<long long>(rng() % den), den);
  });
}

std::vector<GroupPtr> groups_up_to_eight() {
  std::vector<GroupPtr> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back(groups::cyclic(n));
  out.push_back(groups::klein_four());
  out.push_back(groups::symmetric(3));
  out.push_back(groups::dihedral(4));
  out.push_back(groups::product(*groups::cyclic(2), *groups::cyclic(4)));
  out.push_back(groups::product(*groups::klein_four(), *groups::cyclic(2)));
  return out;
}

Algebra twisted_klein() {
  const auto k4 = groups::klein_four();
  return twisted_group_algebra(k4, torsion_classes(k4).at(1));
}

// ---- criteria ---------------------------------------------------------------------------------------------------

void ising_table(Check& c) {
  for (const auto& ring : {io::load_fusion(kData / "ising.ring"), minimal_model(4, 3).ring}) {
    c.expect(validate_ring(ring).valid(), "ring fails validation");
    const auto& l = ring.labels();
    // Labels in order 1, eps, sigma for both sources.
    const auto one = ring.unit();
    FusionRing::Label eps = 0, sigma = 0;
    for (FusionRing::Label x = 0; x < ring.rank(); ++x) {
      if (x == one) continue;
      if (fuse(ring, x, x) == std::vector<FusionRing::Label>{one}) eps = x;
      else sigma = x;
    }
    auto sorted = [](std::vector<FusionRing::Label> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    c.expect(ring.rank() == 3, "rank");
    c.expect(fuse(ring, eps, eps) == std::vector<FusionRing::Label>{one}, "eps x eps = 1");
    c.expect(fuse(ring, eps, sigma) == std::vector<FusionRing::Label>{sigma}, "eps x sigma = sigma");
    c.expect(fuse(ring, sigma, eps) == std::vector<FusionRing::Label>{sigma}, "sigma x eps = sigma");
    c.expect(sorted(fuse(ring, sigma, sigma)) == sorted({one, eps}), "sigma x sigma = 1 + eps");
    c.expect(classify_defect(ring, sigma) == DefectKind::Duality, "sigma is a duality defect");
    c.expect(classify_defect(ring, eps) == DefectKind::GroupLike, "eps is group-like");
    const auto gl = group_likes(ring);
    c.expect(gl.labels.size() == 2 && gl.group->order() == 2 && gl.group->is_abelian(), "group-likes form cyclic 2");
    c.note = "sigma x sigma = " + l[fuse(ring, sigma, sigma)[0]] + " + " + l[fuse(ring, sigma, sigma)[1]];
  }
}

void minimal_models(Check& c) {
  for (auto [p, q] : {std::pair{4, 3}, {5, 2}, {5, 4}}) {
    const auto m = minimal_model(p, q);
    c.expect(!check_verlinde(m.ring, m.s), "Verlinde mismatch for M(" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  const auto m = minimal_model(4, 3);
  const auto& r = m.ring;
  const auto one = r.unit(), sigma = r.index("(1,2)"), eps = r.index("(1,3)");
  const auto ds = defect_operator(r, m.s, sigma), d1 = defect_operator(r, m.s, one), de = defect_operator(r, m.s, eps);
  const auto root2 = sqrt_integer(2);
  c.expect(ds.eigenvalue(one) == root2, "D_sigma on (1,1) is sqrt 2");
  c.expect(ds.eigenvalue(eps) == -root2, "D_sigma on (1,3) is -sqrt 2");
  c.expect(ds.eigenvalue(sigma).is_zero(), "D_sigma on (1,2) is 0");
  for (std::size_t i = 0; i < r.rank(); ++i)
    c.expect(ds.eigenvalue(i) * ds.eigenvalue(i) == d1.eigenvalue(i) + de.eigenvalue(i), "D_sigma^2 = D_1 + D_eps");
  c.note = "sigma spectrum " + str(ds.eigenvalue(one)) + ", " + str(ds.eigenvalue(eps)) + ", " + str(ds.eigenvalue(sigma));
}

void cohomology_suite(Check& c) {
  auto factors = [](const GroupPtr& g, std::size_t n) { return cohomology(g, n).invariant_factors; };
  for (std::size_t n : {2, 3, 4})
    c.expect(factors(groups::cyclic(n), 3) == std::vector<BigInt>{BigInt(n)}, "H^3(cyclic " + std::to_string(n) + ")");
  for (std::size_t n = 1; n <= 5; ++n) c.expect(factors(groups::cyclic(n), 2).empty(), "H^2(cyclic " + std::to_string(n) + ")");
  c.expect(factors(groups::klein_four(), 2) == std::vector<BigInt>{2}, "H^2(Klein four)");
  // Brute force wherever both enumerations stay within 2^24 cochains.
  std::size_t checked = 0, skipped = 0;
  std::vector<std::pair<GroupPtr, std::size_t>> cases;
  for (std::size_t n : {2, 3, 4, 5})
    for (std::size_t d : {2, 3}) cases.push_back({groups::cyclic(n), d});
  cases.push_back({groups::klein_four(), 2});
  cases.push_back({groups::klein_four(), 3});
  for (const auto& [g, d] : cases) {
    const double m = static_cast<double>(g->order());
    const double cells = std::pow(m - 1, static_cast<double>(d)), lower = std::pow(m - 1, static_cast<double>(d - 1));
    if (std::pow(m, cells) > 16777216.0 || std::pow(m * m, lower) > 16777216.0) {
      ++skipped;
      continue;
    }
    ++checked;
    c.expect(BigInt(oracle::cohomology_order(table_of(*g), d)) == cohomology(g, d).order(),
             "brute-force order of H^" + std::to_string(d) + " for order " + std::to_string(g->order()));
  }
  c.note = std::to_string(checked) + " cases cross-checked by enumeration, " + std::to_string(skipped) + " beyond 2^24";
}

void obstruction(Check& c) {
  const auto z2 = groups::cyclic(2);
  const auto psi = cohomology(z2, 3).generators.at(0);
  c.expect(class_order(psi) == 2, "nontrivial class on cyclic 2");
  c.expect(!trivialize(psi), "trivialize fails on the full group");
  const auto on_trivial = restrict(psi, SubgroupEmbedding::from_elements(z2, {z2->identity()}));
  const auto phi = trivialize(on_trivial);
  c.expect(phi.has_value() && coboundary(*phi) == on_trivial, "trivialize succeeds on the trivial subgroup");
  const auto z4 = groups::cyclic(4);
  const auto gen = cohomology(z4, 3).generators.at(0);
  c.expect(class_order(gen) == 4, "order-4 class on cyclic 4");
  const auto half = restrict(gen, SubgroupEmbedding::from_elements(z4, {0, 2}));
  c.expect(class_order(half) == 2, "restriction to the order-2 subgroup has order 2");
  c.expect(!trivialize(half), "restricted class does not trivialize");
  c.note = "restricted class order " + std::to_string(class_order(half));
}

void randomized_cohomology(Check& c) {
  std::mt19937_64 rng(20260101);
  const auto gs = groups_up_to_eight();
  std::size_t dd = 0, comm = 0, pent = 0;
  for (int t = 0; t < 500; ++t) {
    const auto& g = gs[rng() % gs.size()];
    const std::size_t degree = rng() % 4;
    const auto x = random_cochain(rng, g, degree, 24);
    if (!coboundary(coboundary(x)).is_zero()) c.failures.push_back("d o d != 0");
    else ++dd;
  }
  for (int t = 0; t < 500; ++t) {
    const auto& g = gs[rng() % gs.size()];
    const auto subs = groups::subgroups(g);
    const auto& h = subs[rng() % subs.size()];
    const std::size_t degree = rng() % 3;
    const auto x = random_cochain(rng, g, degree, 12);
    if (restrict(coboundary(x), h) != coboundary(restrict(x, h))) c.failures.push_back("restriction does not commute with d");
    else ++comm;
  }
  for (int t = 0; t < 500; ++t) {
    const auto& g = gs[rng() % gs.size()];
    const auto h = cohomology(g, 3);
    // A random class plus a random coboundary as associator.
    Cochain psi = coboundary(random_cochain(rng, g, 2, 6));
    for (std::size_t i = 0; i < h.generators.size(); ++i)
      psi = psi + static_cast<long long>(rng() % static_cast<std::uint64_t>(h.invariant_factors[i])) * h.generators[i];
    AssociatorData assoc;
    std::vector<FiniteGroup::Element> a(3);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      psi.unpack(i, a);
      assoc[{a[0], a[1], a[2]}] = psi.value(i);
    }
    const auto base = pentagon_extract({}, g, assoc);
    const auto delta = random_cochain(rng, g, 2, 12);
    JunctionData junction;
    std::vector<FiniteGroup::Element> b(2);
    for (std::size_t i = 0; i < delta.size(); ++i) {
      delta.unpack(i, b);
      junction[{b[0], b[1]}] = delta.value(i);
    }
    const auto rescaled = pentagon_extract(junction, g, assoc);
    if (!same_class(rescaled, base) || rescaled - base != coboundary(delta) || !same_class(base, psi))
      c.failures.push_back("pentagon_extract class changed under rescaling (order " + std::to_string(g->order()) + ")");
    else ++pent;
  }
  c.note = std::to_string(dd) + "/500 d o d, " + std::to_string(comm) + "/500 restriction, " + std::to_string(pent) +
           "/500 pentagon";
}

void move_invariance(Check& c) {
  const std::vector<std::pair<std::string, Algebra>> algebras = {
      {"trivial", Algebra::trivial()},
      {"C[Z2]", group_algebra(groups::cyclic(2))},
      {"C[S3]", group_algebra(groups::symmetric(3))},
      {"twisted K4", twisted_klein()}};
  std::size_t runs = 0;
  for (int genus = 0; genus <= 2; ++genus)
    for (std::size_t k = 0; k < algebras.size(); ++k) {
      const auto seed = static_cast<std::uint64_t>(1000 + 10 * genus + k);
      const auto rep = move_invariance_suite(standard_surface(genus), algebras[k].second, seed, 100);
      const bool ok = rep.all_equal() && rep.moves.size() == 100;
      c.expect(ok, "genus " + std::to_string(genus) + " with " + algebras[k].first);
      runs += ok;
    }
  c.note = std::to_string(runs) + "/12 suites of 100 moves unchanged";
}

void torus_center(Check& c) {
  const auto k4 = groups::klein_four();
  const std::vector<std::pair<Algebra, long long>> specific = {{group_algebra(groups::cyclic(2)), 2},
                                                               {group_algebra(groups::symmetric(3)), 3},
                                                               {group_algebra(k4), 4},
                                                               {twisted_klein(), 1}};
  const auto torus = standard_surface(1);
  std::string values;
  for (const auto& [a, expected] : specific) {
    const auto z = evaluate(torus, a);
    c.expect(z == Cyclotomic(expected) && center_dim(a) == static_cast<std::size_t>(expected), "torus value " + std::to_string(expected));
    values += (values.empty() ? "" : ", ") + str(z);
  }
  std::vector<Algebra> more = {Algebra::trivial(), group_algebra(groups::dihedral(4)),
                               sandwich(group_algebra(groups::cyclic(2)), group_algebra(groups::cyclic(3))),
                               direct_sum(twisted_klein(), group_algebra(groups::cyclic(3)))};
  for (const auto* f : {"trivial.alg", "z2-group-algebra.alg", "z3-group-algebra.alg", "klein4-twisted.alg", "qi-split.alg",
                        "s3-group-algebra.alg"})
    more.push_back(io::load_algebra(kData / f));
  for (const auto& g : groups_up_to_eight())
    for (const auto& phi : torsion_classes(g)) more.push_back(twisted_group_algebra(g, phi));
  for (const auto& a : more)
    c.expect(evaluate(torus, a) == Cyclotomic(static_cast<long long>(center_dim(a))), "torus = center_dim (dim " + std::to_string(a.dim()) + ")");
  c.note = "values " + values + "; " + std::to_string(more.size() + specific.size()) + " algebras";
}

void discrete_torsion(Check& c) {
  const auto k4 = groups::klein_four();
  const auto classes = torsion_classes(k4);
  c.expect(classes.size() == 2, "two torsion classes");
  if (classes.size() != 2) return;
  c.expect(!same_class(classes[0], classes[1]), "classes are distinct");
  const auto z0 = orbifold_torus(k4, classes[0]), z1 = orbifold_torus(k4, classes[1]);
  c.expect(z0 == Cyclotomic(4), "trivial torsion gives 4");
  c.expect(z1 == Cyclotomic(1), "nontrivial torsion gives 1");
  c.expect(z0 == evaluate(standard_surface(1), twisted_group_algebra(k4, classes[0])), "state sum (trivial)");
  c.expect(z1 == evaluate(standard_surface(1), twisted_group_algebra(k4, classes[1])), "state sum (nontrivial)");
  c.note = "Z = " + str(z0) + " and " + str(z1);
}

void generalised_orbifold(Check& c) {
  const std::vector<Algebra> outer = {group_algebra(groups::cyclic(2)), group_algebra(groups::cyclic(3))};
  const std::vector<Algebra> inner = {Algebra::trivial(), group_algebra(groups::cyclic(2)), twisted_klein()};
  std::size_t equal = 0;
  for (const auto& a : outer)
    for (const auto& b : inner) {
      const auto q = sandwich(a, b);
      c.expect(center_dim(q) == center_dim(b), "center_dim(sandwich) = center_dim(B)");
      for (int genus = 0; genus <= 2; ++genus) {
        const auto s = standard_surface(genus);
        const bool ok = evaluate(s, q) == evaluate(s, b);
        c.expect(ok, "dim A " + std::to_string(a.dim()) + ", dim B " + std::to_string(b.dim()) + ", genus " + std::to_string(genus));
        equal += ok;
      }
    }
  c.note = std::to_string(equal) + "/18 surface values equal";
}

void cli_round_trip(Check& c) {
  auto data = [](const char* f) { return (kData / f).string(); };
  const std::vector<std::vector<std::string>> commands = {
      {"cohomology", data("klein4.group"), "--degree", "3"},
      {"cohomology", data("s3.group"), "--degree", "2"},
      {"obstruct", data("z2.group"), data("z2-anomaly.cochain"), "--subgroup", "g"},
      {"obstruct", data("z4.group"), data("z4-generator.cochain"), "--subgroup", "e"},
      {"torsion", data("klein4.group")},
      {"fusion", "validate", data("ising.ring")},
      {"fusion", "duality", data("ising.ring")},
      {"minimal-model", "5", "4"},
      {"algebra", "validate", data("klein4-twisted.alg")},
      {"statesum", "eval", data("torus.surf"), data("z2-group-algebra.alg")},
      {"statesum", "moves", data("genus2.surf"), data("s3-group-algebra.alg"), "--seed", "11", "--count", "25"},
      {"orbifold", "torus", data("klein4.group"), data("klein4-torsion.cochain")},
      {"orbifold", "sandwich", data("z2-group-algebra.alg"), data("klein4-twisted.alg"), "--genus", "2"},
  };
  std::size_t blocks = 0;
  for (const auto& args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int code1 = cli::run(args, out1, err1), code2 = cli::run(args, out2, err2);
    const std::string name = args[0] + " " + args[1];
    c.expect(code1 <= 1, name + ": exit " + std::to_string(code1) + " " + err1.str());
    c.expect(code1 == code2 && out1.str() == out2.str(), name + ": repeated run differs");
    try {
      const auto parsed = io::parse_blocks(out1.str());
      c.expect(parsed.size() == 1, name + ": expected one block");
      for (const auto& b : parsed) {
        const auto text = io::to_text(b);
        c.expect(out1.str().find(text) != std::string::npos, name + ": reprinted block differs");
        c.expect(io::parse_blocks(text).at(0) == b, name + ": reparsed block differs");
        ++blocks;
      }
    } catch (const ParseError& e) {
      c.failures.push_back(name + ": " + e.what());
    }
  }
  c.note = std::to_string(blocks) + " blocks round-tripped, " + std::to_string(commands.size()) + " commands repeated";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Ising fusion table and duality classification", 1, ising_table},
      {2, "minimal-model Verlinde check and Ising defect spectra", 5, minimal_models},
      {3, "cohomology groups with brute-force cross-check", 60, cohomology_suite},
      {4, "obstruction and restriction behavior", 5, obstruction},
      {5, "randomized d o d, restriction, pentagon invariance", 60, randomized_cohomology},
      {6, "move invariance of the state sum", 300, move_invariance},
      {7, "torus value equals center dimension", 30, torus_center},
      {8, "discrete torsion on the Klein four-group", 30, discrete_torsion},
      {9, "generalised orbifold equality", 300, generalised_orbifold},
      {10, "CLI round trip and determinism", 30, cli_round_trip},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > crit.limit_seconds) check.failures.push_back("runtime over the limit");
    const bool pass = check.failures.empty();
    failed += !pass;
    std::printf("%s  %2d  %-55s %8.3f s (limit %g s)  %s\n", pass ? "PASS" : "FAIL", crit.number, crit.name.c_str(), seconds,
                crit.limit_seconds, pass ? check.note.c_str() : check.failures.front().c_str());
    for (std::size_t i = 1; i < check.failures.size() && i < 5; ++i) std::printf("          %s\n", check.failures[i].c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
