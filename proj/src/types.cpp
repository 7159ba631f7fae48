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

#include "tyneq/types.hpp"

#include <algorithm>
#include <utility>

namespace tyneq {

Type Type::parameter(std::string name) {
  Type t;
  t.is_parameter_ = true;
  t.name_ = std::move(name);
  return t;
}

Type Type::application(std::string constructor, std::vector<Type> args) {
  Type t;
  t.is_parameter_ = false;
  t.name_ = std::move(constructor);
  t.args_ = std::move(args);
  return t;
}

int Type::depth() const {
  if (is_parameter_) return 0;
  int max_arg = 0;
  for (const Type& arg : args_) max_arg = std::max(max_arg, arg.depth());
  return 1 + max_arg;
}

bool Type::is_monotype() const {
  if (is_parameter_) return false;
  return std::all_of(args_.begin(), args_.end(),
                     [](const Type& a) { return a.is_monotype(); });
}

void Type::collect_parameters(std::set<std::string>& out) const {
  if (is_parameter_) {
    out.insert(name_);
    return;
  }
  for (const Type& arg : args_) arg.collect_parameters(out);
}

std::set<std::string> Type::parameters() const {
  std::set<std::string> out;
  collect_parameters(out);
  return out;
}

std::string Type::to_string() const {
  if (is_parameter_) return "'" + name_;
  if (args_.empty()) return name_;
  std::string out = name_;
  out += '(';
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i > 0) out += ", ";
    out += args_[i].to_string();
  }
  out += ')';
  return out;
}

int Type::compare(const Type& a, const Type& b) {
  if (a.is_parameter_ != b.is_parameter_) return a.is_parameter_ ? -1 : 1;
  if (int c = a.name_.compare(b.name_); c != 0) return c < 0 ? -1 : 1;
  if (a.args_.size() != b.args_.size())
    return a.args_.size() < b.args_.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args_.size(); ++i) {
    if (int c = compare(a.args_[i], b.args_[i]); c != 0) return c;
  }
  return 0;
}

}  // namespace tyneq
