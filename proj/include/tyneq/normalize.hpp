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

#include <optional>

#include "tyneq/alphabet.hpp"
#include "tyneq/constraints.hpp"

namespace tyneq {

/// Outcome of normalizing one inequation: kept (still carries a
/// parameter on some side), settled true, or settled false.
struct NormalizedInequation {
  enum class Kind { kept, is_true, is_false };

  Kind kind = Kind::is_true;
  TypeInequation inequation;  // meaningful only when kind == kept

  static NormalizedInequation keep(TypeInequation i) {
    return {Kind::kept, std::move(i)};
  }
  static NormalizedInequation truth() { return {Kind::is_true, {}}; }
  static NormalizedInequation falsity() { return {Kind::is_false, {}}; }
};

/// Either a proper system or the distinguished unsolvable marker that a
/// normalization step produces when some member settles false.
class NormalizedSystem {
 public:
  static NormalizedSystem false_system() { return NormalizedSystem(); }
  explicit NormalizedSystem(InequationSystem system)
      : system_(std::move(system)) {}

  bool is_false() const { return !system_.has_value(); }
  const InequationSystem& system() const { return system_.value(); }

  std::string to_string() const {
    return is_false() ? "FALSE" : system_->to_string();
  }

  friend bool operator==(const NormalizedSystem&,
                         const NormalizedSystem&) = default;

 private:
  NormalizedSystem() = default;

  std::optional<InequationSystem> system_;
};

/// Normalizes a single inequation over an alphabet of arity <= 1:
/// a parameter on either side keeps the inequation unchanged; two
/// applications settle by the constructor order, recursing into the
/// argument when both sides have one. Throws UNSUPPORTED_ARITY when a
/// type mentions a constructor applied to two or more arguments.
NormalizedInequation nf_ineq(const TypeInequation& inequation,
                             const OrderedTypeAlphabet& alphabet);

/// Normalizes every member: drops the true ones, keeps the rest in
/// canonical form, and collapses to the false marker as soon as any
/// member settles false.
NormalizedSystem nf_system(const InequationSystem& system,
                           const OrderedTypeAlphabet& alphabet);

}  // namespace tyneq
