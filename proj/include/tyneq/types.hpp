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

#include <set>
#include <string>
#include <vector>

namespace tyneq {

struct TypeConstructor {
  std::string name;
  int arity = 0;

  friend bool operator==(const TypeConstructor&,
                         const TypeConstructor&) = default;
};

/// A type is either a parameter or a constructor application. Immutable
/// value with structural equality; the total order below is the one the
/// canonical system form is built on (it coincides with lexicographic
/// order of the prefix serialization, see compare()).
class Type {
 public:
  Type() : is_parameter_(true), name_("_") {}

  static Type parameter(std::string name);
  static Type application(std::string constructor, std::vector<Type> args = {});

  bool is_parameter() const { return is_parameter_; }
  bool is_application() const { return !is_parameter_; }

  /// Parameter name or constructor name, depending on the kind.
  const std::string& name() const { return name_; }
  const std::vector<Type>& args() const { return args_; }

  /// depth(parameter) = 0, depth(K(args)) = 1 + max over args (0 if none).
  int depth() const;

  bool is_monotype() const;
  void collect_parameters(std::set<std::string>& out) const;
  std::set<std::string> parameters() const;

  /// Prefix serialization: parameters as 'name, applications as
  /// name or name(arg, ...).
  std::string to_string() const;

  /// Total order; negative/zero/positive like strcmp. Parameters sort
  /// before applications, then by name, argument count, arguments.
  static int compare(const Type& a, const Type& b);

  friend bool operator==(const Type& a, const Type& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const Type& a, const Type& b) {
    return compare(a, b) < 0;
  }

 private:
  bool is_parameter_;
  std::string name_;
  std::vector<Type> args_;
};

}  // namespace tyneq
