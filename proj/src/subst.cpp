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

#include "tyneq/subst.hpp"

#include <algorithm>
#include <sstream>

namespace tyneq {

namespace {

void drop_identity_bindings(std::map<std::string, Type>& bindings) {
  for (auto it = bindings.begin(); it != bindings.end();) {
    if (it->second.is_parameter() && it->second.name() == it->first)
      it = bindings.erase(it);
    else
      ++it;
  }
}

}  // namespace

ParameterSubstitution::ParameterSubstitution(
    std::map<std::string, Type> bindings)
    : bindings_(std::move(bindings)) {
  drop_identity_bindings(bindings_);
}

ParameterSubstitution::ParameterSubstitution(
    std::initializer_list<std::pair<const std::string, Type>> bindings)
    : bindings_(bindings) {
  drop_identity_bindings(bindings_);
}

Type ParameterSubstitution::apply(const Type& t) const {
  if (t.is_parameter()) {
    auto it = bindings_.find(t.name());
    return it == bindings_.end() ? t : it->second;
  }
  std::vector<Type> args;
  args.reserve(t.args().size());
  for (const Type& arg : t.args()) args.push_back(apply(arg));
  return Type::application(t.name(), std::move(args));
}

std::set<std::string> ParameterSubstitution::domain() const {
  std::set<std::string> out;
  for (const auto& [name, image] : bindings_) {
    (void)image;
    out.insert(name);
  }
  return out;
}

std::set<std::string> ParameterSubstitution::range_parameters() const {
  std::set<std::string> out;
  for (const auto& [name, image] : bindings_) {
    (void)name;
    image.collect_parameters(out);
  }
  return out;
}

bool ParameterSubstitution::closed() const {
  return std::all_of(bindings_.begin(), bindings_.end(), [](const auto& b) {
    return b.second.is_monotype();
  });
}

int ParameterSubstitution::depth() const {
  int d = 0;
  for (const auto& [name, image] : bindings_) {
    (void)name;
    d = std::max(d, image.depth());
  }
  return d;
}

ParameterSubstitution ParameterSubstitution::restricted_to(
    const std::set<std::string>& keep) const {
  std::map<std::string, Type> bindings;
  for (const auto& [name, image] : bindings_)
    if (keep.count(name)) bindings.emplace(name, image);
  return ParameterSubstitution(std::move(bindings));
}

std::string ParameterSubstitution::to_string() const {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& [name, image] : bindings_) {
    if (!first) out << ", ";
    first = false;
    out << '\'' << name << " -> " << image.to_string();
  }
  out << ']';
  return out.str();
}

ParameterSubstitution compose(const ParameterSubstitution& first,
                              const ParameterSubstitution& second) {
  std::map<std::string, Type> bindings;
  for (const auto& [name, image] : first.bindings())
    bindings.emplace(name, second.apply(image));
  for (const auto& [name, image] : second.bindings())
    bindings.emplace(name, image);  // keeps the first-pass entry if present
  return ParameterSubstitution(std::move(bindings));
}

}  // namespace tyneq
