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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tyneq/alphabet.hpp"
#include "tyneq/constraints.hpp"
#include "tyneq/normalize.hpp"
#include "tyneq/subst.hpp"

namespace tyneq {

/// All substitutions with domain exactly `parameters`, depth 1, and each
/// image mentioning no parameter besides the one it replaces: every
/// parameter maps to a nullary constructor or to a unary constructor
/// applied to the parameter itself. Deterministic order: parameters
/// sorted by name, images in constructor declaration order, rightmost
/// parameter varying fastest. Throws UNSUPPORTED_ARITY if the alphabet
/// has a constructor of arity >= 2.
std::vector<ParameterSubstitution> all_par_subst(
    const std::set<std::string>& parameters,
    const OrderedTypeAlphabet& alphabet);

/// One expansion step on a normalized system: instantiates with every
/// depth-1 substitution over its parameters and normalizes, keeping the
/// results that do not settle false, paired with the substitution that
/// produced them. Order follows all_par_subst.
std::vector<std::pair<InequationSystem, ParameterSubstitution>> inst(
    const InequationSystem& system, const OrderedTypeAlphabet& alphabet);

/// One child system produced while expanding a generation, tagged with
/// the index of its parent in the generation's system list.
struct Expansion {
  InequationSystem child;
  ParameterSubstitution step;
  std::size_t parent_index = 0;
};

/// Expands every system of one generation via inst. The two variants
/// compute identical results in identical order (children grouped by
/// parent index, inst order within a group); the parallel one fans the
/// independent inst calls out across threads and merges by index.
std::vector<Expansion> expand_generation_serial(
    const std::vector<InequationSystem>& systems,
    const OrderedTypeAlphabet& alphabet);
std::vector<Expansion> expand_generation_parallel(
    const std::vector<InequationSystem>& systems,
    const OrderedTypeAlphabet& alphabet);

/// One generation of the search: the systems reached after `generation`
/// expansion steps that were not seen before, plus, for every system
/// discovered so far, the first predecessor and step that reached it.
struct Frontier {
  std::size_t generation = 0;
  std::vector<InequationSystem> systems;  // canonical order, no duplicates
  std::map<InequationSystem, std::pair<InequationSystem, ParameterSubstitution>>
      parents;
};

struct SolveStats {
  std::size_t generations = 0;        // expansion rounds performed
  std::size_t systems_explored = 0;   // systems handed to inst
  std::size_t memory_size = 0;        // distinct systems remembered
  std::vector<std::size_t> frontier_sizes;  // |frontier| per generation
};

struct SolveResult {
  bool verdict = false;
  std::optional<ParameterSubstitution> witness;  // present iff verdict
  SolveStats stats;
};

enum class ExpandMode { parallel, serial };

struct SolveOptions {
  ExpandMode mode = ExpandMode::parallel;
};

/// Decides solvability of a system over an alphabet of arity <= 1.
/// Normalizes first and short-circuits the false marker and the empty
/// system; otherwise iterates inst over frontiers with a memory of every
/// system seen, stopping when the empty system appears (solvable) or a
/// frontier dies out (unsolvable). A positive verdict carries a witness,
/// composed along the chain of steps that reached the empty system and
/// checked against the original system before being returned.
SolveResult solve(const InequationSystem& raw,
                  const OrderedTypeAlphabet& alphabet,
                  const SolveOptions& options = {});

}  // namespace tyneq
