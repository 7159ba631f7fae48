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

#include "tyneq/solver.hpp"

#include <algorithm>

namespace tyneq {

std::vector<ParameterSubstitution> all_par_subst(
    const std::set<std::string>& parameters,
    const OrderedTypeAlphabet& alphabet) {
  if (alphabet.max_arity() > 1)
    throw Error(errc::unsupported_arity,
                "alphabet has a constructor of arity >= 2; the solver "
                "handles arity <= 1 only");

  const std::vector<std::string> names(parameters.begin(), parameters.end());

  // Per-parameter image lists, constructors in declaration order.
  std::vector<std::vector<Type>> images(names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    for (const TypeConstructor& c : alphabet.constructors())
      images[i].push_back(c.arity == 0
                              ? Type::application(c.name)
                              : Type::application(
                                    c.name, {Type::parameter(names[i])}));

  std::vector<ParameterSubstitution> out;
  if (names.empty()) {
    out.emplace_back();
    return out;
  }

  std::vector<std::size_t> pick(names.size(), 0);
  for (;;) {
    std::map<std::string, Type> bindings;
    for (std::size_t i = 0; i < names.size(); ++i)
      bindings.emplace(names[i], images[i][pick[i]]);
    out.emplace_back(std::move(bindings));

    // Odometer step, rightmost parameter fastest.
    std::size_t i = names.size();
    while (i > 0) {
      --i;
      if (++pick[i] < images[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<std::pair<InequationSystem, ParameterSubstitution>> inst(
    const InequationSystem& system, const OrderedTypeAlphabet& alphabet) {
  std::vector<std::pair<InequationSystem, ParameterSubstitution>> out;
  for (ParameterSubstitution& phi : all_par_subst(system.parameters(), alphabet)) {
    NormalizedSystem n = nf_system(system.apply(phi), alphabet);
    if (!n.is_false()) out.emplace_back(n.system(), std::move(phi));
  }
  return out;
}

std::vector<Expansion> expand_generation_serial(
    const std::vector<InequationSystem>& systems,
    const OrderedTypeAlphabet& alphabet) {
  std::vector<Expansion> out;
  for (std::size_t i = 0; i < systems.size(); ++i)
    for (auto& [child, step] : inst(systems[i], alphabet))
      out.push_back({std::move(child), std::move(step), i});
  return out;
}

std::vector<Expansion> expand_generation_parallel(
    const std::vector<InequationSystem>& systems,
    const OrderedTypeAlphabet& alphabet) {
  std::vector<std::vector<Expansion>> per_parent(systems.size());
#if defined(TYNEQ_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < systems.size(); ++i) {
    std::vector<Expansion> local;
    for (auto& [child, step] : inst(systems[i], alphabet))
      local.push_back({std::move(child), std::move(step), i});
    per_parent[i] = std::move(local);
  }

  // Deterministic merge in parent-index order.
  std::size_t total = 0;
  for (const auto& group : per_parent) total += group.size();
  std::vector<Expansion> out;
  out.reserve(total);
  for (auto& group : per_parent)
    for (Expansion& e : group) out.push_back(std::move(e));
  return out;
}

namespace {

ParameterSubstitution reconstruct_witness(
    const Frontier& frontier, const InequationSystem& initial,
    const InequationSystem& reached) {
  // Steps from `initial` down to `reached`, innermost last.
  std::vector<ParameterSubstitution> steps;
  InequationSystem at = reached;
  while (!(at == initial)) {
    auto it = frontier.parents.find(at);
    if (it == frontier.parents.end())
      throw Error(errc::internal_witness_failure,
                  "predecessor chain broken at " + at.to_string());
    steps.push_back(it->second.second);
    at = it->second.first;
  }
  ParameterSubstitution witness;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    witness = compose(witness, *it);
  return witness;
}

}  // namespace

SolveResult solve(const InequationSystem& raw,
                  const OrderedTypeAlphabet& alphabet,
                  const SolveOptions& options) {
  SolveResult result;

  NormalizedSystem normalized = nf_system(raw, alphabet);
  if (normalized.is_false()) {
    result.verdict = false;
    return result;
  }
  if (normalized.system().empty()) {
    result.verdict = true;
    result.witness = ParameterSubstitution();
    return result;
  }

  const InequationSystem initial = normalized.system();
  std::set<InequationSystem> memory{initial};
  Frontier frontier;
  frontier.systems = {initial};
  result.stats.frontier_sizes.push_back(1);

  const InequationSystem empty_system;
  for (;;) {
    std::vector<Expansion> expansions =
        options.mode == ExpandMode::serial
            ? expand_generation_serial(frontier.systems, alphabet)
            : expand_generation_parallel(frontier.systems, alphabet);
    result.stats.systems_explored += frontier.systems.size();
    ++frontier.generation;

    std::set<InequationSystem> next;
    for (Expansion& e : expansions) {
      if (memory.count(e.child) || next.count(e.child)) continue;
      frontier.parents.emplace(
          e.child, std::make_pair(frontier.systems[e.parent_index],
                                  std::move(e.step)));
      next.insert(std::move(e.child));
    }

    result.stats.generations = frontier.generation;
    result.stats.frontier_sizes.push_back(next.size());

    if (next.count(empty_system)) {
      ParameterSubstitution witness =
          reconstruct_witness(frontier, initial, empty_system)
              .restricted_to(raw.parameters());
      if (!verify_witness(raw, witness, alphabet))
        throw Error(errc::internal_witness_failure,
                    "reconstructed witness fails verification on the "
                    "original system",
                    {witness.to_string()});
      result.verdict = true;
      result.witness = std::move(witness);
      memory.insert(next.begin(), next.end());
      result.stats.memory_size = memory.size();
      return result;
    }
    if (next.empty()) {
      result.verdict = false;
      result.stats.memory_size = memory.size();
      return result;
    }

    memory.insert(next.begin(), next.end());
    frontier.systems.assign(next.begin(), next.end());
  }
}

}  // namespace tyneq
