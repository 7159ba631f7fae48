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

// Compares the serial and the OpenMP expansion kernel on frontiers taken
// from a real typability workload, plus the end-to-end solve with either
// kernel. Run with --benchmark_min_time=... as usual.

#include <benchmark/benchmark.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tyneq/constraints.hpp"
#include "tyneq/normalize.hpp"
#include "tyneq/solver.hpp"
#include "tyneq/term.hpp"

namespace {

using namespace tyneq;

OrderedTypeAlphabet running_alphabet() {
  return validate_alphabet({{"nat", 0}, {"int", 0}, {"list", 1}, {"set", 1}},
                           {{"nat", "int"}, {"list", "set"}});
}

SignatureTable running_signatures() {
  SignatureTable table;
  table["zero"] = {"zero", {}, Type::application("nat")};
  table["nil"] = {"nil", {}, Type::application("list", {Type::parameter("a")})};
  table["cons"] = {
      "cons",
      {Type::parameter("a"),
       Type::application("list", {Type::parameter("a")})},
      Type::application("list", {Type::parameter("a")})};
  return table;
}

/// Nested list term cons(x1, cons(x2, ... cons(xn, nil))). Its constraint
/// system grows linearly with n and drives a multi-generation search.
Term nested_list(int n) {
  Term t = Term::application("nil");
  for (int i = n; i >= 1; --i)
    t = Term::application(
        "cons", {Term::variable("x" + std::to_string(i)), std::move(t)});
  return t;
}

InequationSystem workload_system(int n) {
  FreshNames fresh;
  Term t = nested_list(n);
  auto [gamma, tau] = init_context(t, fresh);
  return gen_constraints(gamma, t, tau, running_signatures(), fresh);
}

/// The generation with the most systems encountered while solving the
/// workload, found by replaying the frontier search serially.
std::vector<InequationSystem> widest_frontier(const InequationSystem& raw,
                                              const OrderedTypeAlphabet& a) {
  NormalizedSystem normalized = nf_system(raw, a);
  std::set<InequationSystem> memory{normalized.system()};
  std::vector<InequationSystem> frontier{normalized.system()};
  std::vector<InequationSystem> widest = frontier;
  while (!frontier.empty()) {
    std::set<InequationSystem> next;
    for (const Expansion& e : expand_generation_serial(frontier, a)) {
      if (memory.count(e.child)) continue;
      next.insert(e.child);
    }
    if (next.count(InequationSystem{})) break;
    memory.insert(next.begin(), next.end());
    frontier.assign(next.begin(), next.end());
    if (frontier.size() > widest.size()) widest = frontier;
  }
  return widest;
}

void BM_expand_serial(benchmark::State& state) {
  OrderedTypeAlphabet a = running_alphabet();
  std::vector<InequationSystem> frontier =
      widest_frontier(workload_system(static_cast<int>(state.range(0))), a);
  for (auto _ : state)
    benchmark::DoNotOptimize(expand_generation_serial(frontier, a));
  state.counters["frontier"] = static_cast<double>(frontier.size());
}

void BM_expand_parallel(benchmark::State& state) {
  OrderedTypeAlphabet a = running_alphabet();
  std::vector<InequationSystem> frontier =
      widest_frontier(workload_system(static_cast<int>(state.range(0))), a);
  for (auto _ : state)
    benchmark::DoNotOptimize(expand_generation_parallel(frontier, a));
  state.counters["frontier"] = static_cast<double>(frontier.size());
}

void BM_solve_serial(benchmark::State& state) {
  OrderedTypeAlphabet a = running_alphabet();
  InequationSystem system = workload_system(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve(system, a, {ExpandMode::serial}));
}

void BM_solve_parallel(benchmark::State& state) {
  OrderedTypeAlphabet a = running_alphabet();
  InequationSystem system = workload_system(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve(system, a, {ExpandMode::parallel}));
}

}  // namespace

// Per-system expansion work grows like 4^p in the parameter count p,
// itself roughly 2n + 2 for the nested list of length n, so each extra
// element costs about 16x. Length 4 is already seconds per expansion.
BENCHMARK(BM_expand_serial)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_expand_parallel)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_solve_serial)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_solve_parallel)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
