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

#include "tyneq/term.hpp"

#include <sstream>
#include <utility>

namespace tyneq {

Term Term::variable(std::string name) {
  Term t;
  t.is_variable_ = true;
  t.name_ = std::move(name);
  return t;
}

Term Term::application(std::string fn, std::vector<Term> args) {
  Term t;
  t.is_variable_ = false;
  t.name_ = std::move(fn);
  t.args_ = std::move(args);
  return t;
}

void Term::collect_free_variables(std::set<std::string>& out) const {
  if (is_variable_) {
    out.insert(name_);
    return;
  }
  for (const Term& arg : args_) arg.collect_free_variables(out);
}

std::set<std::string> Term::free_variables() const {
  std::set<std::string> out;
  collect_free_variables(out);
  return out;
}

int Term::node_count() const {
  int n = 1;
  for (const Term& arg : args_) n += arg.node_count();
  return n;
}

std::string Term::to_string() const {
  if (is_variable_) return name_;
  if (args_.empty()) return name_;
  std::ostringstream out;
  out << name_ << '(';
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) out << ", ";
    out << args_[i].to_string();
  }
  out << ')';
  return out.str();
}

std::set<std::string> Signature::parameters() const {
  std::set<std::string> out;
  for (const Type& t : domain) t.collect_parameters(out);
  codomain.collect_parameters(out);
  return out;
}

}  // namespace tyneq
