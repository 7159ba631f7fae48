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

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tyneq/types.hpp"

namespace tyneq {

// A mapping from type parameters to types that is the identity almost
// everywhere. Bindings where a parameter maps to itself are dropped on
// construction, so the stored map is exactly the domain.
class ParameterSubstitution {
 public:
  ParameterSubstitution() = default;
  explicit ParameterSubstitution(std::map<std::string, Type> bindings);
  ParameterSubstitution(
      std::initializer_list<std::pair<const std::string, Type>> bindings);

  // Applies the substitution to every parameter occurring in `t`.
  [[nodiscard]] Type apply(const Type& t) const;

  // Parameters that are not mapped to themselves.
  [[nodiscard]] std::set<std::string> domain() const;

  // Parameters occurring in the images of the domain.
  [[nodiscard]] std::set<std::string> range_parameters() const;

  // True when every image is a monotype.
  [[nodiscard]] bool closed() const;

  // Largest depth of an image; 0 for the identity substitution.
  [[nodiscard]] int depth() const;

  [[nodiscard]] bool identity() const { return bindings_.empty(); }

  /// Keeps only the bindings whose parameter is in `keep`.
  [[nodiscard]] ParameterSubstitution restricted_to(
      const std::set<std::string>& keep) const;

  [[nodiscard]] const std::map<std::string, Type>& bindings() const {
    return bindings_;
  }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ParameterSubstitution&,
                         const ParameterSubstitution&) = default;

 private:
  std::map<std::string, Type> bindings_;
};

// Composition: applying the result equals applying `first`, then `second`.
[[nodiscard]] ParameterSubstitution compose(const ParameterSubstitution& first,
                                            const ParameterSubstitution& second);

}  // namespace tyneq
