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

#include "tyneq/constraints.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tyneq/error.hpp"

namespace tyneq {

std::string TypeInequation::to_string() const {
  return lhs.to_string() + " <= " + rhs.to_string();
}

int TypeInequation::compare(const TypeInequation& a, const TypeInequation& b) {
  if (int c = Type::compare(a.lhs, b.lhs)) return c;
  return Type::compare(a.rhs, b.rhs);
}

InequationSystem::InequationSystem(std::vector<TypeInequation> inequations)
    : ineqs_(std::move(inequations)) {
  std::sort(ineqs_.begin(), ineqs_.end());
  ineqs_.erase(std::unique(ineqs_.begin(), ineqs_.end()), ineqs_.end());
}

std::set<std::string> InequationSystem::parameters() const {
  std::set<std::string> out;
  for (const TypeInequation& i : ineqs_) {
    i.lhs.collect_parameters(out);
    i.rhs.collect_parameters(out);
  }
  return out;
}

int InequationSystem::depth() const {
  int d = 0;
  for (const TypeInequation& i : ineqs_)
    d = std::max({d, i.lhs.depth(), i.rhs.depth()});
  return d;
}

InequationSystem InequationSystem::apply(
    const ParameterSubstitution& s) const {
  std::vector<TypeInequation> out;
  out.reserve(ineqs_.size());
  for (const TypeInequation& i : ineqs_)
    out.push_back({s.apply(i.lhs), s.apply(i.rhs)});
  return InequationSystem(std::move(out));
}

std::string InequationSystem::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < ineqs_.size(); ++i) {
    if (i) out << ", ";
    out << ineqs_[i].to_string();
  }
  out << '}';
  return out.str();
}

int InequationSystem::compare(const InequationSystem& a,
                              const InequationSystem& b) {
  const std::size_t shared = std::min(a.ineqs_.size(), b.ineqs_.size());
  for (std::size_t i = 0; i < shared; ++i)
    if (int c = TypeInequation::compare(a.ineqs_[i], b.ineqs_[i])) return c;
  if (a.ineqs_.size() < b.ineqs_.size()) return -1;
  if (a.ineqs_.size() > b.ineqs_.size()) return 1;
  return 0;
}

std::pair<TypeAssignment, Type> init_context(const Term& t,
                                             FreshNames& fresh) {
  TypeAssignment gamma;
  for (const std::string& x : t.free_variables())
    gamma.bindings.emplace(x, fresh.next_parameter());
  return {std::move(gamma), fresh.next_parameter()};
}

namespace {

void gen_into(const TypeAssignment& gamma, const Term& t, const Type& tau,
              const SignatureTable& signatures, FreshNames& fresh,
              std::vector<TypeInequation>& out) {
  if (t.is_variable()) {
    auto it = gamma.bindings.find(t.name());
    if (it == gamma.bindings.end())
      throw Error(errc::unbound_variable,
                  "variable '" + t.name() + "' has no type assignment",
                  {t.name()});
    out.push_back({it->second, tau});
    return;
  }

  auto sig_it = signatures.find(t.name());
  if (sig_it == signatures.end())
    throw Error(errc::unknown_symbol,
                "function symbol '" + t.name() + "' has no signature",
                {t.name()});
  const Signature& sig = sig_it->second;
  if (sig.domain.size() != t.args().size())
    throw Error(errc::arity_mismatch,
                "'" + t.name() + "' expects " +
                    std::to_string(sig.domain.size()) + " arguments, got " +
                    std::to_string(t.args().size()),
                {t.name(), std::to_string(sig.domain.size()),
                 std::to_string(t.args().size())});

  // Rename the signature's parameters to names no other type can contain.
  std::map<std::string, Type> renaming;
  for (const std::string& p : sig.parameters())
    renaming.emplace(p, fresh.next_parameter());
  ParameterSubstitution rename{std::move(renaming)};

  out.push_back({rename.apply(sig.codomain), tau});
  for (std::size_t i = 0; i < t.args().size(); ++i)
    gen_into(gamma, t.args()[i], rename.apply(sig.domain[i]), signatures,
             fresh, out);
}

}  // namespace

InequationSystem gen_constraints(const TypeAssignment& gamma, const Term& t,
                                 const Type& tau,
                                 const SignatureTable& signatures,
                                 FreshNames& fresh) {
  std::vector<TypeInequation> out;
  gen_into(gamma, t, tau, signatures, fresh, out);
  return InequationSystem(std::move(out));
}

bool verify_witness(const InequationSystem& system,
                    const ParameterSubstitution& theta,
                    const OrderedTypeAlphabet& alphabet) {
  return std::all_of(system.inequations().begin(), system.inequations().end(),
                     [&](const TypeInequation& i) {
                       return subtype(alphabet, theta.apply(i.lhs),
                                      theta.apply(i.rhs));
                     });
}

}  // namespace tyneq
