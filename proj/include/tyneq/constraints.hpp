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

#include <atomic>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tyneq/alphabet.hpp"
#include "tyneq/subst.hpp"
#include "tyneq/term.hpp"
#include "tyneq/types.hpp"

namespace tyneq {

/// lhs is required to be a subtype of rhs; a substitution solves the
/// inequation when the instantiated sides are in the subtype relation.
struct TypeInequation {
  Type lhs;
  Type rhs;

  std::string to_string() const;

  static int compare(const TypeInequation& a, const TypeInequation& b);

  friend bool operator==(const TypeInequation& a, const TypeInequation& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const TypeInequation& a, const TypeInequation& b) {
    return compare(a, b) < 0;
  }
};

/// A finite set of type inequations kept as a canonically sorted,
/// duplicate-free list, so two systems are equal exactly when their
/// representations are identical. The solver's memory set relies on this.
class InequationSystem {
 public:
  InequationSystem() = default;
  explicit InequationSystem(std::vector<TypeInequation> inequations);

  const std::vector<TypeInequation>& inequations() const { return ineqs_; }
  std::size_t size() const { return ineqs_.size(); }
  bool empty() const { return ineqs_.empty(); }

  std::set<std::string> parameters() const;

  /// Largest depth of any side; 0 for the empty system.
  int depth() const;

  /// Applies the substitution to both sides of every inequation. The
  /// result is canonicalized again (instantiation can merge members).
  [[nodiscard]] InequationSystem apply(const ParameterSubstitution& s) const;

  std::string to_string() const;

  static int compare(const InequationSystem& a, const InequationSystem& b);

  friend bool operator==(const InequationSystem& a,
                         const InequationSystem& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const InequationSystem& a, const InequationSystem& b) {
    return compare(a, b) < 0;
  }

 private:
  std::vector<TypeInequation> ineqs_;
};

/// Source of parameter names no surface program can mention. Names take
/// the form a#k with a counter that only moves forward, so every draw is
/// distinct from every type already in play.
class FreshNames {
 public:
  std::string next_name() {
    return "a#" + std::to_string(counter_.fetch_add(1));
  }
  Type next_parameter() { return Type::parameter(next_name()); }

 private:
  std::atomic<unsigned long> counter_{0};
};

/// Most general starting point for a typability question: each free
/// variable of t gets its own fresh parameter (in sorted variable order),
/// and the result type is one more fresh parameter.
std::pair<TypeAssignment, Type> init_context(const Term& t, FreshNames& fresh);

/// Builds the constraint system for Γ ⊢ t : τ. A variable contributes
/// Γ(x) ⪯ τ. An application f(s₁..s_n) with signature σ₁×..×σ_n → σ
/// contributes σ' ⪯ τ with the signature's parameters renamed fresh,
/// plus the systems for the arguments against the renamed σᵢ'.
InequationSystem gen_constraints(const TypeAssignment& gamma, const Term& t,
                                 const Type& tau,
                                 const SignatureTable& signatures,
                                 FreshNames& fresh);

/// Certificate check: Θ solves I iff the instantiated sides of every
/// member are in the subtype relation.
bool verify_witness(const InequationSystem& system,
                    const ParameterSubstitution& theta,
                    const OrderedTypeAlphabet& alphabet);

}  // namespace tyneq
