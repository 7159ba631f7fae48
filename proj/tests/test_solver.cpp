// Copyright 2026 The tyneq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "tyneq/normalize.hpp"
#include "tyneq/oracle.hpp"
#include "tyneq/solver.hpp"

using namespace tyneq;
using tyneq::testing::make_r;

namespace {

Type P(const std::string& name) { return Type::parameter(name); }
Type A(const std::string& name, std::vector<Type> args = {}) {
  return Type::application(name, std::move(args));
}

bool same_expansions(const std::vector<Expansion>& a,
                     const std::vector<Expansion>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].child != b[i].child || a[i].step != b[i].step ||
        a[i].parent_index != b[i].parent_index)
      return false;
  return true;
}

}  // namespace

TEST_CASE("nf_ineq") {
  OrderedTypeAlphabet r = make_r();

  SUBCASE("a parameter side keeps the inequation") {
    NormalizedInequation n = nf_ineq({P("a"), A("nat")}, r);
    CHECK(n.kind == NormalizedInequation::Kind::kept);
    CHECK(n.inequation == TypeInequation{P("a"), A("nat")});
    CHECK(nf_ineq({A("nat"), P("a")}, r).kind ==
          NormalizedInequation::Kind::kept);
    CHECK(nf_ineq({P("a"), P("b")}, r).kind ==
          NormalizedInequation::Kind::kept);
  }
  SUBCASE("nullary applications settle by the order") {
    CHECK(nf_ineq({A("nat"), A("int")}, r).kind ==
          NormalizedInequation::Kind::is_true);
    CHECK(nf_ineq({A("int"), A("nat")}, r).kind ==
          NormalizedInequation::Kind::is_false);
  }
  SUBCASE("matching heads recurse into the argument") {
    CHECK(nf_ineq({A("list", {A("nat")}), A("set", {A("int")})}, r).kind ==
          NormalizedInequation::Kind::is_true);
    NormalizedInequation n = nf_ineq({A("list", {A("nat")}), A("set", {P("a")})}, r);
    CHECK(n.kind == NormalizedInequation::Kind::kept);
    CHECK(n.inequation == TypeInequation{A("nat"), P("a")});
    CHECK(nf_ineq({A("set", {A("nat")}), A("list", {A("nat")})}, r).kind ==
          NormalizedInequation::Kind::is_false);
  }
  SUBCASE("head mismatch settles false even with parameters inside") {
    CHECK(nf_ineq({A("nat"), A("list", {P("a")})}, r).kind ==
          NormalizedInequation::Kind::is_false);
    CHECK(nf_ineq({A("list", {P("a")}), A("nat")}, r).kind ==
          NormalizedInequation::Kind::is_false);
  }
  SUBCASE("constructors of arity two are rejected") {
    OrderedTypeAlphabet wide =
        validate_alphabet({{"nat", 0}, {"pair", 2}}, {});
    try {
      nf_ineq({A("pair", {A("nat"), A("nat")}), A("pair", {A("nat"), A("nat")})},
              wide);
      FAIL("expected UNSUPPORTED_ARITY");
    } catch (const Error& e) {
      CHECK(e.code() == errc::unsupported_arity);
    }
  }
}

TEST_CASE("nf_system") {
  OrderedTypeAlphabet r = make_r();

  InequationSystem mixed{{{A("nat"), A("int")}, {P("a"), A("nat")}}};
  CHECK(nf_system(mixed, r) ==
        NormalizedSystem(InequationSystem{{{P("a"), A("nat")}}}));

  InequationSystem bad{{{A("nat"), A("int")}, {A("int"), A("nat")}}};
  CHECK(nf_system(bad, r) == NormalizedSystem::false_system());
  CHECK(nf_system(bad, r).is_false());

  CHECK(nf_system(InequationSystem{}, r) ==
        NormalizedSystem(InequationSystem{}));

  // Members that normalize to the same kept form collapse to one.
  InequationSystem merging{{
      {A("list", {A("nat")}), A("set", {P("a")})},
      {A("nat"), P("a")},
  }};
  NormalizedSystem n = nf_system(merging, r);
  REQUIRE_FALSE(n.is_false());
  CHECK(n.system() == InequationSystem{{{A("nat"), P("a")}}});
}

TEST_CASE("all_par_subst") {
  OrderedTypeAlphabet r = make_r();

  SUBCASE("single parameter, declaration order") {
    std::vector<ParameterSubstitution> all = all_par_subst({"a"}, r);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == ParameterSubstitution{{"a", A("nat")}});
    CHECK(all[1] == ParameterSubstitution{{"a", A("int")}});
    CHECK(all[2] == ParameterSubstitution{{"a", A("list", {P("a")})}});
    CHECK(all[3] == ParameterSubstitution{{"a", A("set", {P("a")})}});
  }
  SUBCASE("no parameters gives exactly the identity") {
    std::vector<ParameterSubstitution> all = all_par_subst({}, r);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == ParameterSubstitution{});
  }
  SUBCASE("two parameters, rightmost varies fastest") {
    std::vector<ParameterSubstitution> all = all_par_subst({"b", "a"}, r);
    REQUIRE(all.size() == 16);
    CHECK(all[0] == ParameterSubstitution{{"a", A("nat")}, {"b", A("nat")}});
    CHECK(all[1] == ParameterSubstitution{{"a", A("nat")}, {"b", A("int")}});
    CHECK(all[4] == ParameterSubstitution{{"a", A("int")}, {"b", A("nat")}});
    CHECK(all[15] == ParameterSubstitution{{"a", A("set", {P("a")})},
                                           {"b", A("set", {P("b")})}});
  }
  SUBCASE("arity two is rejected") {
    OrderedTypeAlphabet wide =
        validate_alphabet({{"nat", 0}, {"pair", 2}}, {});
    CHECK_THROWS_AS(all_par_subst({"a"}, wide), Error);
  }
}

TEST_CASE("all_par_subst image shape") {
  testing::Rng rng(5150);
  for (int round = 0; round < 40; ++round) {
    OrderedTypeAlphabet alphabet = testing::random_unary_alphabet(rng, 4);
    std::set<std::string> params{"a", "b"};
    std::vector<ParameterSubstitution> all = all_par_subst(params, alphabet);

    std::size_t nullary = 0, unary = 0;
    for (const TypeConstructor& c : alphabet.constructors())
      (c.arity == 0 ? nullary : unary) += 1;
    const std::size_t per_param = nullary + unary;
    CHECK(all.size() == per_param * per_param);

    for (const ParameterSubstitution& phi : all) {
      CHECK(phi.domain() == params);
      CHECK(phi.depth() == 1);
      for (const auto& [name, image] : phi.bindings()) {
        REQUIRE(image.is_application());
        if (!image.args().empty()) {
          REQUIRE(image.args().size() == 1);
          CHECK(image.args()[0] == P(name));
        }
      }
    }
    // All distinct.
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        CHECK_FALSE(all[i] == all[j]);
  }
}

TEST_CASE("inst") {
  OrderedTypeAlphabet r = make_r();

  SUBCASE("lower bound by a nullary constructor") {
    auto children = inst(InequationSystem{{{P("a"), A("nat")}}}, r);
    REQUIRE(children.size() == 1);
    CHECK(children[0].first.empty());
    CHECK(children[0].second == ParameterSubstitution{{"a", A("nat")}});
  }
  SUBCASE("upper bound keeps every constructor above") {
    auto children = inst(InequationSystem{{{A("nat"), P("a")}}}, r);
    REQUIRE(children.size() == 2);
    CHECK(children[0].first.empty());
    CHECK(children[0].second == ParameterSubstitution{{"a", A("nat")}});
    CHECK(children[1].first.empty());
    CHECK(children[1].second == ParameterSubstitution{{"a", A("int")}});
  }
  SUBCASE("contradictory bounds leave no children") {
    auto children =
        inst(InequationSystem{{{P("a"), A("nat")}, {A("int"), P("a")}}}, r);
    CHECK(children.empty());
  }
  SUBCASE("unary images peel one constructor layer") {
    auto children = inst(InequationSystem{{{P("a"), A("list", {A("nat")})}}}, r);
    REQUIRE(children.size() == 1);
    CHECK(children[0].first == InequationSystem{{{P("a"), A("nat")}}});
    CHECK(children[0].second ==
          ParameterSubstitution{{"a", A("list", {P("a")})}});
  }
}

TEST_CASE("solve on pinned systems") {
  OrderedTypeAlphabet r = make_r();

  SUBCASE("single lower-bounded parameter") {
    SolveResult res = solve(InequationSystem{{{P("a"), A("nat")}}}, r);
    CHECK(res.verdict);
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == ParameterSubstitution{{"a", A("nat")}});
    CHECK(res.stats.generations == 1);
    CHECK(res.stats.systems_explored == 1);
    CHECK(res.stats.memory_size == 2);
    CHECK(res.stats.frontier_sizes == std::vector<std::size_t>{1, 1});
  }

  SUBCASE("normalization settles the system before any search") {
    SolveResult res = solve(InequationSystem{{{A("int"), A("nat")}}}, r);
    CHECK_FALSE(res.verdict);
    CHECK(res.stats.generations == 0);
    CHECK(res.stats.systems_explored == 0);
    CHECK(res.stats.memory_size == 0);
    CHECK(res.stats.frontier_sizes.empty());

    SolveResult trivial = solve(InequationSystem{{{A("nat"), A("int")}}}, r);
    CHECK(trivial.verdict);
    REQUIRE(trivial.witness.has_value());
    CHECK(*trivial.witness == ParameterSubstitution{});
    CHECK(trivial.stats.generations == 0);
  }

  SUBCASE("unsolvable two-sided bounds") {
    SolveResult res =
        solve(InequationSystem{{{P("a"), A("nat")}, {A("int"), P("a")}}}, r);
    CHECK_FALSE(res.verdict);
    CHECK_FALSE(res.witness.has_value());
    CHECK(res.stats.generations == 1);
    CHECK(res.stats.systems_explored == 1);
    CHECK(res.stats.memory_size == 1);
    CHECK(res.stats.frontier_sizes == std::vector<std::size_t>{1, 0});
  }

  SUBCASE("self-referential bound dies out through the memory") {
    // 'a <= set('a) has no solution; the only non-false instantiations
    // cycle back to systems already seen.
    SolveResult res = solve(InequationSystem{{{P("a"), A("set", {P("a")})}}}, r);
    CHECK_FALSE(res.verdict);
    CHECK(res.stats.generations == 2);
    CHECK(res.stats.systems_explored == 2);
    CHECK(res.stats.memory_size == 2);
    CHECK(res.stats.frontier_sizes == std::vector<std::size_t>{1, 1, 0});
  }

  SUBCASE("constraint system of cons(zero, nil)") {
    InequationSystem system{{
        {A("list", {P("a#1")}), P("a#0")},
        {A("list", {P("a#2")}), A("list", {P("a#1")})},
        {A("nat"), P("a#1")},
    }};
    SolveResult res = solve(system, r);
    CHECK(res.verdict);
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == ParameterSubstitution{{"a#0", A("list", {A("int")})},
                                                {"a#1", A("int")},
                                                {"a#2", A("nat")}});
    CHECK(verify_witness(system, *res.witness, r));
    CHECK(res.stats.generations == 2);
    CHECK(res.stats.systems_explored == 3);
    CHECK(res.stats.memory_size == 4);
    CHECK(res.stats.frontier_sizes == std::vector<std::size_t>{1, 2, 1});
  }

  SUBCASE("arity two is rejected") {
    OrderedTypeAlphabet wide =
        validate_alphabet({{"nat", 0}, {"pair", 2}}, {});
    InequationSystem system{{{P("a"), A("pair", {A("nat"), A("nat")})}}};
    CHECK_THROWS_AS(solve(system, wide), Error);
  }
}

TEST_CASE("solve is deterministic") {
  OrderedTypeAlphabet r = make_r();
  InequationSystem system{{
      {A("list", {P("a#1")}), P("a#0")},
      {A("nat"), P("a#1")},
      {P("a#1"), A("int")},
  }};
  SolveResult first = solve(system, r);
  for (int i = 0; i < 5; ++i) {
    SolveResult again = solve(system, r, {ExpandMode::serial});
    CHECK(again.verdict == first.verdict);
    CHECK(again.witness == first.witness);
    CHECK(again.stats.generations == first.stats.generations);
    CHECK(again.stats.frontier_sizes == first.stats.frontier_sizes);
  }
}

TEST_CASE("serial and parallel expansion agree") {
  testing::Rng rng(20250);
  const std::vector<std::string> params{"a", "b", "c"};
  for (int round = 0; round < 30; ++round) {
    OrderedTypeAlphabet alphabet = testing::random_unary_alphabet(rng, 4);
    std::vector<InequationSystem> generation;
    const std::size_t count = 1 + testing::pick(rng, 6);
    for (std::size_t i = 0; i < count; ++i)
      generation.push_back(testing::random_system(rng, alphabet, params, 3, 2));
    CHECK(same_expansions(expand_generation_serial(generation, alphabet),
                          expand_generation_parallel(generation, alphabet)));
  }
}

TEST_CASE("solve agrees with exhaustive search on random systems") {
  testing::Rng rng(31337);
  int solvable_seen = 0, unsolvable_seen = 0;
  for (int round = 0; round < 200; ++round) {
    OrderedTypeAlphabet alphabet = testing::random_unary_alphabet(rng, 4);
    const std::vector<std::string> params{"a", "b"};
    InequationSystem system =
        testing::random_system(rng, alphabet, params, 3, 2);

    SolveResult res = solve(system, alphabet);
    if (res.verdict) {
      ++solvable_seen;
      REQUIRE(res.witness.has_value());
      CHECK(verify_witness(system, *res.witness, alphabet));

      // Ground the witness (leftover parameters are unconstrained, so
      // any nullary works) and check the exhaustive search finds a
      // solution within the grounded witness depth.
      std::map<std::string, Type> closing;
      Type ground;
      for (const TypeConstructor& c : alphabet.constructors())
        if (c.arity == 0) {
          ground = Type::application(c.name);
          break;
        }
      std::set<std::string> open;
      for (const auto& [name, image] : res.witness->bindings())
        image.collect_parameters(open);
      for (const std::string& p : system.parameters())
        if (!res.witness->domain().count(p)) open.insert(p);
      for (const std::string& p : open) closing.emplace(p, ground);
      ParameterSubstitution closed =
          compose(*res.witness, ParameterSubstitution(std::move(closing)));
      CHECK(verify_witness(system, closed, alphabet));
      int k = 1;
      for (const auto& [name, image] : closed.bindings())
        k = std::max(k, image.depth());
      CHECK(brute_solvable(system, std::max(3, k), alphabet));
    } else {
      ++unsolvable_seen;
      CHECK_FALSE(res.witness.has_value());
      CHECK_FALSE(brute_solvable(system, 3, alphabet));
    }
  }
  // The generator must exercise both outcomes for this test to mean
  // anything.
  CHECK(solvable_seen > 15);
  CHECK(unsolvable_seen > 15);
}

TEST_CASE("every solvable step decomposes through a depth-one head") {
  // Any closed solution factors as head * remainder where the head is
  // one of the depth-one substitutions the solver enumerates and the
  // remainder, strictly shallower, solves the instantiated system. This
  // is the descent that makes the frontier search complete.
  testing::Rng rng(271828);
  int exercised = 0;
  for (int round = 0; round < 400; ++round) {
    OrderedTypeAlphabet alphabet = testing::random_unary_alphabet(rng, 4);
    const std::vector<std::string> params{"a", "b"};
    InequationSystem system =
        testing::random_system(rng, alphabet, params, 2, 2);
    NormalizedSystem normalized = nf_system(system, alphabet);
    if (normalized.is_false() || normalized.system().empty()) continue;
    const InequationSystem& kept = normalized.system();

    ParameterSubstitution psi =
        testing::random_closed_subst(rng, alphabet, kept.parameters(), 3);
    if (!verify_witness(kept, psi, alphabet)) continue;
    if (psi.depth() < 1) continue;
    ++exercised;

    auto [head, rest] = testing::decompose_step(psi);
    for (const auto& [name, image] : psi.bindings())
      CHECK(compose(head, rest).apply(P(name)) == image);

    std::vector<ParameterSubstitution> all =
        all_par_subst(kept.parameters(), alphabet);
    CHECK(std::find(all.begin(), all.end(), head) != all.end());

    NormalizedSystem child = nf_system(kept.apply(head), alphabet);
    REQUIRE_FALSE(child.is_false());
    CHECK(verify_witness(child.system(), rest, alphabet));
    if (!child.system().empty()) CHECK(rest.depth() < psi.depth());
  }
  CHECK(exercised > 60);
}

TEST_CASE("expansion children stay inside the initial system's universe") {
  // Instantiating and renormalizing never grows a system: children use a
  // subset of the parent's parameters, stay within the parent's depth,
  // and have at most as many members. These three facts bound the set of
  // reachable systems and are what makes the search terminate.
  testing::Rng rng(11235);
  int children_seen = 0;
  for (int round = 0; round < 300; ++round) {
    OrderedTypeAlphabet alphabet = testing::random_unary_alphabet(rng, 4);
    const std::vector<std::string> params{"a", "b"};
    InequationSystem raw = testing::random_system(rng, alphabet, params, 3, 2);
    NormalizedSystem normalized = nf_system(raw, alphabet);
    if (normalized.is_false() || normalized.system().empty()) continue;
    const InequationSystem& parent = normalized.system();

    std::set<std::string> parent_params = parent.parameters();
    for (const auto& [child, step] : inst(parent, alphabet)) {
      ++children_seen;
      CHECK(child.size() <= parent.size());
      CHECK(child.depth() <= parent.depth());
      for (const std::string& p : child.parameters())
        CHECK(parent_params.count(p) == 1);
    }
  }
  CHECK(children_seen > 100);
}
