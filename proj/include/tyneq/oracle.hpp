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
#include <vector>

#include "tyneq/alphabet.hpp"
#include "tyneq/constraints.hpp"
#include "tyneq/term.hpp"

namespace tyneq {

// Brute-force reference implementations. They enumerate candidate
// monotypes up to a depth bound and candidate substitutions exhaustively,
// so they are only usable on small instances; the test suite pits them
// against the production solver and pipeline. Never called on the
// production path (except behind the explicit --oracle cross-check flag).

struct OracleBudget {
  int max_depth = 3;  // monotype enumeration bound, >= 1
  std::size_t max_candidates = 50'000'000;  // cap on enumerated candidates
};

/// All monotypes of depth <= k over an alphabet of arity <= 1, grouped
/// by depth, constructors in declaration order within a group.
std::vector<Type> enum_monotypes(const OrderedTypeAlphabet& alphabet, int k);

/// True iff some substitution mapping every parameter of the system to a
/// monotype of depth <= k solves the system. Literal exhaustive check.
bool brute_solvable(const InequationSystem& system, int k,
                    const OrderedTypeAlphabet& alphabet,
                    std::size_t max_candidates = 50'000'000);

/// True iff the term can be typed: some assignment of monotypes (depth
/// <= budget.max_depth) to its free variables and some such monotype as
/// the result admit a derivation, with signature instantiations
/// enumerated over the same monotypes independently at every
/// application node.
bool brute_typable(const Term& t, const SignatureTable& signatures,
                   const OrderedTypeAlphabet& alphabet,
                   const OracleBudget& budget = {});

}  // namespace tyneq
