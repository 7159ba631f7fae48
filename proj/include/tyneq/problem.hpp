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

#include <string>
#include <utility>
#include <variant>

#include "tyneq/alphabet.hpp"
#include "tyneq/constraints.hpp"
#include "tyneq/term.hpp"

namespace tyneq {

/// A parsed problem file: a validated alphabet, the declared signatures,
/// and at most one payload (a term to type, a system to solve, or a pair
/// of types to compare).
struct Problem {
  using Payload =
      std::variant<std::monostate, Term, InequationSystem, std::pair<Type, Type>>;

  OrderedTypeAlphabet alphabet;
  SignatureTable signatures;
  Payload payload;

  bool has_term() const { return std::holds_alternative<Term>(payload); }
  bool has_system() const {
    return std::holds_alternative<InequationSystem>(payload);
  }
  bool has_type_pair() const {
    return std::holds_alternative<std::pair<Type, Type>>(payload);
  }
};

/// Parses the problem-file syntax:
///
///   alphabet: nat/0, int/0, list/1, set/1
///   order: nat <= int list <= set
///   signatures:
///     zero: nat
///     cons: 'a * list('a) -> list('a)
///   term: cons(zero, nil)        # or  solve: <ineqs>  or  subtype: T, T
///
/// `#` starts a line comment. Type parameters are written 'name; an
/// identifier in term position is a variable unless a signature declares
/// it. The section keywords (alphabet, order, signatures, term, solve,
/// subtype) are reserved at entry boundaries. Errors carry line/column
/// in the message and a machine-readable code.
Problem parse_problem(const std::string& text);

/// Renders a problem back into the file syntax. Parsing the result
/// reproduces the problem (the order section lists the full closure).
std::string serialize_problem(const Problem& problem);

}  // namespace tyneq
