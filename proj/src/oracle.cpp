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

#include "tyneq/oracle.hpp"

#include <functional>
#include <map>
#include <string>

#include "tyneq/error.hpp"
#include "tyneq/subst.hpp"

namespace tyneq {

namespace {

void ensure_unary_alphabet(const OrderedTypeAlphabet& alphabet) {
  if (alphabet.max_arity() > 1)
    throw Error(errc::unsupported_arity,
                "alphabet has a constructor of arity >= 2; the oracle "
                "handles arity <= 1 only");
}

void charge(std::size_t& spent, std::size_t cap) {
  if (++spent > cap)
    throw Error(errc::budget_exceeded,
                "oracle candidate enumeration exceeded its cap of " +
                    std::to_string(cap));
}

/// Enumerates all maps from `names` into `images` (rightmost name
/// varying fastest), calling `body` on each; stops early when `body`
/// returns true. Charges one budget unit per map.
bool for_each_assignment(
    const std::vector<std::string>& names, const std::vector<Type>& images,
    std::size_t& spent, std::size_t cap,
    const std::function<bool(const std::map<std::string, Type>&)>& body) {
  if (names.empty()) {
    charge(spent, cap);
    return body({});
  }
  if (images.empty()) return false;
  std::vector<std::size_t> pick(names.size(), 0);
  for (;;) {
    charge(spent, cap);
    std::map<std::string, Type> assignment;
    for (std::size_t i = 0; i < names.size(); ++i)
      assignment.emplace(names[i], images[pick[i]]);
    if (body(assignment)) return true;

    std::size_t i = names.size();
    while (i > 0) {
      --i;
      if (++pick[i] < images.size()) break;
      pick[i] = 0;
      if (i == 0) return false;
    }
  }
}

struct DerivabilityChecker {
  const SignatureTable& signatures;
  const OrderedTypeAlphabet& alphabet;
  const std::vector<Type>& monotypes;
  std::size_t& spent;
  std::size_t cap;

  bool derivable(const std::map<std::string, Type>& gamma, const Term& t,
                 const Type& tau) const {
    if (t.is_variable()) {
      auto it = gamma.find(t.name());
      return it != gamma.end() && subtype(alphabet, it->second, tau);
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
                      std::to_string(sig.domain.size()) +
                      " arguments, got " + std::to_string(t.args().size()),
                  {t.name()});

    std::set<std::string> params = sig.parameters();
    const std::vector<std::string> names(params.begin(), params.end());
    return for_each_assignment(
        names, monotypes, spent, cap,
        [&](const std::map<std::string, Type>& bindings) {
          ParameterSubstitution theta{bindings};
          if (!subtype(alphabet, theta.apply(sig.codomain), tau))
            return false;
          for (std::size_t i = 0; i < t.args().size(); ++i)
            if (!derivable(gamma, t.args()[i], theta.apply(sig.domain[i])))
              return false;
          return true;
        });
  }
};

}  // namespace

std::vector<Type> enum_monotypes(const OrderedTypeAlphabet& alphabet, int k) {
  ensure_unary_alphabet(alphabet);
  std::vector<Type> out;
  std::vector<Type> previous_depth;
  for (int depth = 1; depth <= k; ++depth) {
    std::vector<Type> current;
    for (const TypeConstructor& c : alphabet.constructors()) {
      if (depth == 1) {
        if (c.arity == 0) current.push_back(Type::application(c.name));
      } else if (c.arity == 1) {
        for (const Type& base : previous_depth)
          current.push_back(Type::application(c.name, {base}));
      }
    }
    out.insert(out.end(), current.begin(), current.end());
    previous_depth = std::move(current);
  }
  return out;
}

bool brute_solvable(const InequationSystem& system, int k,
                    const OrderedTypeAlphabet& alphabet,
                    std::size_t max_candidates) {
  ensure_unary_alphabet(alphabet);
  const std::vector<Type> monotypes = enum_monotypes(alphabet, k);
  std::set<std::string> params = system.parameters();
  const std::vector<std::string> names(params.begin(), params.end());
  std::size_t spent = 0;
  return for_each_assignment(
      names, monotypes, spent, max_candidates,
      [&](const std::map<std::string, Type>& bindings) {
        return verify_witness(system, ParameterSubstitution{bindings},
                              alphabet);
      });
}

bool brute_typable(const Term& t, const SignatureTable& signatures,
                   const OrderedTypeAlphabet& alphabet,
                   const OracleBudget& budget) {
  ensure_unary_alphabet(alphabet);
  const std::vector<Type> monotypes =
      enum_monotypes(alphabet, budget.max_depth);
  std::size_t spent = 0;
  DerivabilityChecker checker{signatures, alphabet, monotypes, spent,
                              budget.max_candidates};

  std::set<std::string> vars = t.free_variables();
  const std::vector<std::string> names(vars.begin(), vars.end());
  return for_each_assignment(
      names, monotypes, spent, budget.max_candidates,
      [&](const std::map<std::string, Type>& gamma) {
        for (const Type& tau : monotypes) {
          charge(spent, budget.max_candidates);
          if (checker.derivable(gamma, t, tau)) return true;
        }
        return false;
      });
}

}  // namespace tyneq
