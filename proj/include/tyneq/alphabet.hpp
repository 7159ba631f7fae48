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
#include <string>
#include <utility>
#include <vector>

#include "tyneq/error.hpp"
#include "tyneq/types.hpp"

namespace tyneq {

/// Finite set of type constructors with arities and a partial order on
/// the constructor names, stored as the reflexive-transitive closure of
/// the declared pairs. Construction goes through validate_alphabet, which
/// establishes the invariants: partial order (no cycles among distinct
/// constructors), arity/order compatibility min(#K,#M) <= #L for every
/// chain K <= L <= M, and the presence of at least one nullary
/// constructor.
class OrderedTypeAlphabet {
 public:
  const std::vector<TypeConstructor>& constructors() const { return ctors_; }

  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws UNKNOWN_CONSTRUCTOR
  int arity(const std::string& name) const;

  bool leq_index(std::size_t a, std::size_t b) const {
    return leq_[a * ctors_.size() + b];
  }
  bool leq(const std::string& a, const std::string& b) const;

  bool has_nullary() const;
  int max_arity() const;

  /// All pairs (a, b) with a <= b in the closure, reflexive ones
  /// included, sorted by name.
  std::vector<std::pair<std::string, std::string>> closure_pairs() const;

  friend OrderedTypeAlphabet validate_alphabet(
      std::vector<TypeConstructor> constructors,
      const std::vector<std::pair<std::string, std::string>>& declared_pairs);

 private:
  OrderedTypeAlphabet() = default;

  std::vector<TypeConstructor> ctors_;  // declaration order
  std::map<std::string, std::size_t> index_;
  std::vector<char> leq_;  // row-major closure matrix
};

/// Builds the alphabet: closes the declared pairs reflexively and
/// transitively, then checks antisymmetry, arity/order compatibility and
/// the nullary-constructor requirement. Throws Error with code
/// UNKNOWN_CONSTRUCTOR, ORDER_CYCLE, INCOMPATIBLE (details = witnessing
/// triple K, L, M) or NO_NULLARY.
OrderedTypeAlphabet validate_alphabet(
    std::vector<TypeConstructor> constructors,
    const std::vector<std::pair<std::string, std::string>>& declared_pairs);

/// constructor_leq: closure membership for declared names.
bool constructor_leq(const OrderedTypeAlphabet& alphabet, const std::string& k,
                     const std::string& l);

/// The subtype relation on types: parameters relate only to themselves;
/// K(s_1..s_m) <= L(t_1..t_n) iff K <= L and s_i <= t_i for
/// i = 1..min(m,n). Defined for arbitrary arities.
bool subtype(const OrderedTypeAlphabet& alphabet, const Type& sigma,
             const Type& tau);

}  // namespace tyneq
