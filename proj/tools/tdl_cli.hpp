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

#include "CLI11.hpp"
#include "tdl/cohomology.hpp"
#include "tdl/frobenius.hpp"
#include "tdl/fusion.hpp"
#include "tdl/groups.hpp"
#include "tdl/io.hpp"
#include "tdl/statesum.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tdl::cli {

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kInputError = 2 };

namespace detail {

/// An invalid command-line argument (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::string factors(const std::vector<BigInt>& d) {
  if (d.empty()) return "0";
  std::string out;
  for (const auto& x : d) out += (out.empty() ? "Z/" : " x Z/") + x.str();
  return out;
}

inline std::vector<std::string> factor_items(const std::vector<BigInt>& d) {
  std::vector<std::string> out;
  for (const auto& x : d) out.push_back(x.str());
  return out;
}

inline std::string literal(const Cyclotomic& x) { return to_string(x.minimized()); }

inline std::string move_token(const Move& m) {
  if (auto f = std::get_if<Flip>(&m)) return "flip:" + std::to_string(f->edge);
  if (auto b = std::get_if<BubbleInsert>(&m)) return "insert:" + std::to_string(b->triangle);
  return "remove:" + std::to_string(std::get<BubbleRemove>(m).vertex);
}

inline SubgroupEmbedding parse_subgroup(const GroupPtr& g, const std::vector<std::string>& names) {
  std::vector<FiniteGroup::Element> elements;
  for (const auto& n : names) {
    auto e = g->find(n);
    if (!e) throw UsageError("--subgroup: unknown element '" + n + "'");
    elements.push_back(*e);
  }
  elements.push_back(g->identity());
  try {
    return SubgroupEmbedding::from_elements(g, elements);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--subgroup: ") + e.what());
  }
}

struct Output {
  std::ostream& out;
  io::MachineBlock block;
  void line(const std::string& s) { out << s << "\n"; }
  void value(const std::string& key, const Cyclotomic& v) { block.documents.emplace_back(io::ValueDoc{key, v}); }
  void list(const std::string& key, std::vector<std::string> items) {
    block.documents.emplace_back(io::ListDoc{key, std::move(items)});
  }
  void emit() { out << io::to_text(block); }
};

// ---- subcommands --------------------------------------------------------------------------------------------

inline int cohomology_cmd(Output& o, const std::string& group_file, std::size_t degree) {
  const auto g = io::load_group(group_file);
  const auto h = cohomology(g, degree);
  o.line("H^" + std::to_string(degree) + "(G, Q/Z) = " + factors(h.invariant_factors) + "  (|G| = " +
         std::to_string(g->order()) + ", order " + h.order().str() + ")");
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    o.line("generator " + std::to_string(i) + ": order " + h.invariant_factors[i].str() + ", nonzero on " +
           std::to_string(std::count_if(h.generators[i].residues().begin(), h.generators[i].residues().end(),
                                        [](auto r) { return r != 0; })) +
           " tuples");
  o.block.documents.emplace_back(g);
  o.list("invariant_factors", factor_items(h.invariant_factors));
  for (const auto& c : h.generators) o.block.documents.emplace_back(io::CochainDoc{"@0", c});
  return kOk;
}

inline int obstruct_cmd(Output& o, const std::string& group_file, const std::string& cochain_file,
                        const std::vector<std::string>& subgroup) {
  const auto g = io::load_group(group_file);
  const auto psi = io::load_cochain(cochain_file, g).cochain;
  if (psi.degree() != 3) throw UsageError("the associator must be a 3-cochain");
  if (!is_cocycle(psi)) {
    o.line("input is not a 3-cocycle: d(psi) != 0");
    return kDomainFailure;
  }
  const auto emb = parse_subgroup(g, subgroup);
  const auto restricted = restrict(psi, emb);
  const auto phi = trivialize(restricted);
  std::vector<std::string> members;
  for (auto e : emb.image()) members.push_back(g->name(e));
  std::string names;
  for (const auto& m : members) names += (names.empty() ? "" : ",") + m;
  o.block.documents.emplace_back(emb.subgroup());
  o.list("subgroup", members);
  if (!phi) {
    const auto order = class_order(restricted);
    o.line("H = {" + names + "}: [psi|_H] has order " + std::to_string(order) + "; no orbifold by H");
    o.value("class_order", Cyclotomic(Rational(static_cast<long long>(order))));
    return kDomainFailure;
  }
  o.line("H = {" + names + "}: [psi|_H] = 1; junction phases phi with d(phi) = psi|_H given below");
  o.value("class_order", Cyclotomic(1));
  o.block.documents.emplace_back(io::CochainDoc{"@0", *phi});
  return kOk;
}

inline int torsion_cmd(Output& o, const std::string& group_file) {
  const auto g = io::load_group(group_file);
  const auto h = cohomology(g, 2);
  const auto classes = enumerate_classes(h);
  o.line("H^2(G, Q/Z) = " + factors(h.invariant_factors) + "; " + std::to_string(classes.size()) +
         " discrete torsion class" + (classes.size() == 1 ? "" : "es"));
  o.block.documents.emplace_back(g);
  o.list("invariant_factors", factor_items(h.invariant_factors));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto z = orbifold_torus(g, classes[i]);
    o.line("class " + std::to_string(i) + ": torus partition function " + literal(z));
    o.block.documents.emplace_back(io::CochainDoc{"@0", classes[i]});
  }
  return kOk;
}

inline int fusion_validate_cmd(Output& o, const std::string& ring_file) {
  const auto r = io::load_fusion(ring_file);
  const auto rep = validate_ring(r);
  for (const auto& v : rep.violations) o.line("violation: " + v.message);
  o.line(rep.valid() ? "fusion ring is valid (unit, associativity, duality checked exhaustively)"
                     : std::to_string(rep.violations.size()) + " violation(s)");
  o.block.documents.emplace_back(r);
  o.value("violations", Cyclotomic(Rational(static_cast<long long>(rep.violations.size()))));
  return rep.valid() ? kOk : kDomainFailure;
}

inline int fusion_duality_cmd(Output& o, const std::string& ring_file) {
  const auto r = io::load_fusion(ring_file);
  const auto rep = validate_ring(r);
  if (!rep.valid()) {
    o.line("ring is invalid: " + rep.violations.front().message);
    return kDomainFailure;
  }
  std::vector<std::string> kinds[3];
  for (std::size_t x = 0; x < r.rank(); ++x) {
    const auto k = classify_defect(r, x);
    std::string product;
    for (auto y : fuse(r, x, r.dual(x))) product += (product.empty() ? "" : " + ") + r.label(y);
    o.line(r.label(x) + " " + to_string(k) + "  (" + r.label(x) + " x " + r.label(r.dual(x)) + " = " + product + ")");
    kinds[static_cast<int>(k)].push_back(r.label(x));
  }
  const auto gl = group_likes(r);
  o.line("group-like defects form a group of order " + std::to_string(gl.group->order()));
  o.list("GROUP-LIKE", kinds[0]);
  o.list("DUALITY", kinds[1]);
  o.list("ORDINARY", kinds[2]);
  o.block.documents.emplace_back(gl.group);
  return kOk;
}

inline int minimal_model_cmd(Output& o, int p, int q) {
  if (p <= q || q < 2) throw UsageError("minimal-model needs p > p' >= 2");
  if (p * q > 400) throw SizeError("minimal models are supported for p * p' <= 400");
  const auto m = minimal_model(p, q);
  o.line("M(" + std::to_string(p) + "," + std::to_string(q) + "): c = " + to_string(m.central_charge) + ", " +
         std::to_string(m.ring.rank()) + " primaries");
  for (std::size_t i = 0; i < m.ring.rank(); ++i) o.line("  " + m.ring.label(i) + "  h = " + to_string(m.weights[i]));
  const auto mismatch = check_verlinde(m.ring, m.s);
  o.line(mismatch ? "Verlinde check failed: " + mismatch->message : "Verlinde formula reproduces all fusion coefficients");
  o.block.documents.emplace_back(m.ring);
  o.value("c", Cyclotomic(m.central_charge));
  for (std::size_t i = 0; i < m.ring.rank(); ++i)
    for (std::size_t j = 0; j < m.ring.rank(); ++j)
      o.value("S[" + m.ring.label(i) + "," + m.ring.label(j) + "]", m.s(i, j));
  for (const auto& d : defect_operators(m.ring, m.s)) {
    std::string ev;
    for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
      ev += (i ? ", " : "") + literal(d.eigenvalues[i]);
      o.value("D[" + m.ring.label(d.label) + "," + m.ring.label(i) + "]", d.eigenvalues[i]);
    }
    o.line("  D_" + m.ring.label(d.label) + " eigenvalues: " + ev);
  }
  return mismatch ? kDomainFailure : kOk;
}

inline int algebra_validate_cmd(Output& o, const std::string& algebra_file) {
  const auto a = io::load_algebra(algebra_file);
  const auto rep = validate_algebra(a);
  auto flag = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  o.line("dimension " + std::to_string(a.dim()));
  o.line("associative " + flag(rep.associative) + ", unital " + flag(rep.unital) + ", symmetric " + flag(rep.symmetric) +
         ", Frobenius " + flag(rep.frobenius_nondegenerate) + ", special " + flag(rep.special));
  if (rep.beta) o.line("m o Delta = " + literal(*rep.beta) + " * id");
  for (const auto& p : rep.problems) o.line("problem: " + p);
  o.block.documents.emplace_back(a);
  if (rep.beta) o.value("beta", *rep.beta);
  if (rep.associative && rep.unital) {
    const auto z = center_dim(a);
    o.line("center dimension " + std::to_string(z));
    o.value("center_dim", Cyclotomic(Rational(static_cast<long long>(z))));
  }
  return rep.special_symmetric_frobenius() ? kOk : kDomainFailure;
}

inline int statesum_eval_cmd(Output& o, const std::string& surface_file, const std::string& algebra_file) {
  const auto s = io::load_surface(surface_file);
  const auto a = io::load_algebra(algebra_file);
  const auto z = evaluate(s, a);
  o.line("genus " + std::to_string(s.genus()) + ", " + std::to_string(s.triangle_count()) + " triangles: Z = " + literal(z));
  o.value("Z", z);
  return kOk;
}

inline int statesum_moves_cmd(Output& o, const std::string& surface_file, const std::string& algebra_file,
                              std::uint64_t seed, std::size_t count) {
  const auto s = io::load_surface(surface_file);
  const auto a = io::load_algebra(algebra_file);
  const auto rep = move_invariance_suite(s, a, seed, count);
  o.line("initial Z = " + literal(rep.initial));
  std::vector<std::string> moves;
  std::size_t changed = 0;
  for (std::size_t i = 0; i < rep.moves.size(); ++i) {
    moves.push_back(move_token(rep.moves[i]));
    if (rep.values[i] != rep.initial) {
      ++changed;
      o.line("move " + std::to_string(i) + " (" + to_string(rep.moves[i]) + ") changed Z to " + literal(rep.values[i]));
    }
  }
  o.line(std::to_string(rep.moves.size()) + " moves, " + std::to_string(changed) + " changed the value");
  Surface final_surface = s;
  for (const auto& m : rep.moves) final_surface = apply_move(final_surface, m);
  o.value("Z", rep.initial);
  o.list("moves", moves);
  o.block.documents.emplace_back(final_surface);
  return rep.all_equal() ? kOk : kDomainFailure;
}

inline int orbifold_torus_cmd(Output& o, const std::string& group_file, const std::string& cochain_file) {
  const auto g = io::load_group(group_file);
  const auto phi = io::load_cochain(cochain_file, g).cochain;
  if (phi.degree() != 2 || !is_cocycle(phi)) {
    o.line("discrete torsion needs a 2-cocycle");
    return kDomainFailure;
  }
  const auto z = orbifold_torus(g, phi);
  o.line("Z(torus) = " + literal(z) + "  (commuting-pair sum, equal to the twisted state sum)");
  o.value("Z", z);
  return kOk;
}

inline int orbifold_sandwich_cmd(Output& o, const std::string& a_file, const std::string& b_file, int genus) {
  const auto a = io::load_algebra(a_file);
  const auto b = io::load_algebra(b_file);
  const auto q = sandwich(a, b);
  const auto s = standard_surface(genus);
  const auto zq = evaluate(s, q), zb = evaluate(s, b);
  const auto cq = center_dim(q), cb = center_dim(b);
  o.line("Q = A (x) B (x) A has dimension " + std::to_string(q.dim()));
  o.line("genus " + std::to_string(genus) + ": Z(Q) = " + literal(zq) + ", Z(B) = " + literal(zb));
  o.line("center dimensions: " + std::to_string(cq) + " and " + std::to_string(cb));
  const bool ok = zq == zb && cq == cb;
  o.line(ok ? "Q reproduces B" : "Q does not reproduce B");
  o.value("Z_Q", zq);
  o.value("Z_B", zb);
  o.value("center_dim_Q", Cyclotomic(Rational(static_cast<long long>(cq))));
  o.value("center_dim_B", Cyclotomic(Rational(static_cast<long long>(cb))));
  return ok ? kOk : kDomainFailure;
}

}  // namespace detail

/// Runs one command line (without the program name). Exit codes: 0 success, 1 failed mathematical check, 2 bad input.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with topological defects, orbifolds and Frobenius state sums", "tdl"};
  app.require_subcommand(1);
  std::string f1, f2, mode;
  std::size_t degree = 3, count = 100;
  std::uint64_t seed = 0;
  int p = 0, q = 0, genus = 1;
  std::vector<std::string> subgroup;

  auto* coh = app.add_subcommand("cohomology", "H^n(G, Q/Z) with generators");
  coh->add_option("group", f1, "group file")->required();
  coh->add_option("--degree", degree, "degree 1, 2 or 3")->required()->check(CLI::Range(1, 3));

  auto* obs = app.add_subcommand("obstruct", "whether [psi] restricts trivially to a subgroup");
  obs->add_option("group", f1, "group file")->required();
  obs->add_option("cochain", f2, "3-cocycle file")->required();
  obs->add_option("--subgroup", subgroup, "subgroup elements (comma separated)")->required()->delimiter(',');

  auto* tor = app.add_subcommand("torsion", "discrete torsion classes H^2(G, Q/Z)");
  tor->add_option("group", f1, "group file")->required();

  auto* fus = app.add_subcommand("fusion", "fusion ring checks");
  fus->add_option("mode", mode, "validate or duality")->required()->check(CLI::IsMember({"validate", "duality"}));
  fus->add_option("ring", f1, "fusion ring file")->required();

  auto* mm = app.add_subcommand("minimal-model", "fusion ring, S-matrix and defect spectra of M(p, p')");
  mm->add_option("p", p)->required();
  mm->add_option("p_prime", q)->required();

  auto* alg = app.add_subcommand("algebra", "Frobenius algebra checks");
  alg->add_option("mode", mode, "validate")->required()->check(CLI::IsMember({"validate"}));
  alg->add_option("algebra", f1, "algebra file")->required();

  auto* ss = app.add_subcommand("statesum", "state-sum evaluation");
  ss->add_option("mode", mode, "eval or moves")->required()->check(CLI::IsMember({"eval", "moves"}));
  ss->add_option("surface", f1, "surface file")->required();
  ss->add_option("algebra", f2, "algebra file")->required();
  ss->add_option("--seed", seed, "random seed for moves");
  ss->add_option("--count", count, "number of moves")->check(CLI::Range(0, 100000));

  auto* orb = app.add_subcommand("orbifold", "orbifold partition functions");
  orb->add_option("mode", mode, "torus or sandwich")->required()->check(CLI::IsMember({"torus", "sandwich"}));
  orb->add_option("first", f1, "group file (torus) or algebra A (sandwich)")->required();
  orb->add_option("second", f2, "cochain file (torus) or algebra B (sandwich)")->required();
  orb->add_option("--genus", genus, "surface genus for sandwich")->check(CLI::Range(0, 3));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  detail::Output o{out, {}};
  try {
    int code = kOk;
    if (*coh) code = detail::cohomology_cmd(o, f1, degree);
    else if (*obs) code = detail::obstruct_cmd(o, f1, f2, subgroup);
    else if (*tor) code = detail::torsion_cmd(o, f1);
    else if (*fus) code = mode == "validate" ? detail::fusion_validate_cmd(o, f1) : detail::fusion_duality_cmd(o, f1);
    else if (*mm) code = detail::minimal_model_cmd(o, p, q);
    else if (*alg) code = detail::algebra_validate_cmd(o, f1);
    else if (*ss) code = mode == "eval" ? detail::statesum_eval_cmd(o, f1, f2) : detail::statesum_moves_cmd(o, f1, f2, seed, count);
    else if (*orb) code = mode == "torus" ? detail::orbifold_torus_cmd(o, f1, f2) : detail::orbifold_sandwich_cmd(o, f1, f2, genus);
    if (!o.block.documents.empty()) o.emit();
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
}

}  // namespace tdl::cli
