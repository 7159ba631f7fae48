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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tyneq/types.hpp"

namespace tyneq {

/// First-order term: a variable or a function application. Constants are
/// applications with zero arguments.
class Term {
 public:
  Term() : is_variable_(true), name_("_") {}

  static Term variable(std::string name);
  static Term application(std::string fn, std::vector<Term> args = {});

  bool is_variable() const { return is_variable_; }
  bool is_application() const { return !is_variable_; }

  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  void collect_free_variables(std::set<std::string>& out) const;
  std::set<std::string> free_variables() const;

  /// Variable occurrences plus function applications.
  int node_count() const;

  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  bool is_variable_;
  std::string name_;
  std::vector<Term> args_;
};

/// Declared type of a function symbol: argument types and a result type.
/// Parameter names are local to the signature; they are renamed fresh at
/// every use site during constraint generation.
struct Signature {
  std::string fn;
  std::vector<Type> domain;
  Type codomain;

  std::set<std::string> parameters() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

using SignatureTable = std::map<std::string, Signature>;

/// Finite map from term variables to types.
struct TypeAssignment {
  std::map<std::string, Type> bindings;

  bool contains(const std::string& x) const { return bindings.count(x) > 0; }

  friend bool operator==(const TypeAssignment&,
                         const TypeAssignment&) = default;
};

}  // namespace tyneq
