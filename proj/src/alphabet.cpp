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

#include "tyneq/alphabet.hpp"

#include <algorithm>

namespace tyneq {

const char* errc_name(errc code) {
  switch (code) {
    case errc::unknown_constructor: return "UNKNOWN_CONSTRUCTOR";
    case errc::order_cycle: return "ORDER_CYCLE";
    case errc::incompatible: return "INCOMPATIBLE";
    case errc::no_nullary: return "NO_NULLARY";
    case errc::unsupported_arity: return "UNSUPPORTED_ARITY";
    case errc::unknown_symbol: return "UNKNOWN_SYMBOL";
    case errc::arity_mismatch: return "ARITY_MISMATCH";
    case errc::unbound_variable: return "UNBOUND_VARIABLE";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::budget_exceeded: return "BUDGET_EXCEEDED";
    case errc::internal_witness_failure: return "INTERNAL_WITNESS_FAILURE";
  }
  return "UNKNOWN_ERROR";
}

std::optional<std::size_t> OrderedTypeAlphabet::find(
    const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t OrderedTypeAlphabet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw Error(errc::unknown_constructor,
                "unknown type constructor '" + name + "'", {name});
  return it->second;
}

int OrderedTypeAlphabet::arity(const std::string& name) const {
  return ctors_[index_of(name)].arity;
}

bool OrderedTypeAlphabet::leq(const std::string& a,
                              const std::string& b) const {
  return leq_index(index_of(a), index_of(b));
}

bool OrderedTypeAlphabet::has_nullary() const {
  return std::any_of(ctors_.begin(), ctors_.end(),
                     [](const TypeConstructor& c) { return c.arity == 0; });
}

int OrderedTypeAlphabet::max_arity() const {
  int m = 0;
  for (const TypeConstructor& c : ctors_) m = std::max(m, c.arity);
  return m;
}

std::vector<std::pair<std::string, std::string>>
OrderedTypeAlphabet::closure_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  const std::size_t n = ctors_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq_index(a, b)) out.emplace_back(ctors_[a].name, ctors_[b].name);
  std::sort(out.begin(), out.end());
  return out;
}

OrderedTypeAlphabet validate_alphabet(
    std::vector<TypeConstructor> constructors,
    const std::vector<std::pair<std::string, std::string>>& declared_pairs) {
  OrderedTypeAlphabet a;
  a.ctors_ = std::move(constructors);
  const std::size_t n = a.ctors_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = a.ctors_[i].name;
    if (!a.index_.emplace(name, i).second)
      throw Error(errc::parse_error,
                  "type constructor '" + name + "' declared twice", {name});
  }

  a.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) a.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : declared_pairs) {
    auto li = a.find(lo);
    auto hi_i = a.find(hi);
    if (!li)
      throw Error(errc::unknown_constructor,
                  "order pair references undeclared constructor '" + lo + "'",
                  {lo});
    if (!hi_i)
      throw Error(errc::unknown_constructor,
                  "order pair references undeclared constructor '" + hi + "'",
                  {hi});
    a.leq_[*li * n + *hi_i] = 1;
  }

  // Reflexive-transitive closure (Floyd-Warshall over the finite set).
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!a.leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (a.leq_[k * n + j]) a.leq_[i * n + j] = 1;
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.leq_[i * n + j] && a.leq_[j * n + i])
        throw Error(errc::order_cycle,
                    "order is not antisymmetric: " + a.ctors_[i].name +
                        " <= " + a.ctors_[j].name + " <= " + a.ctors_[i].name,
                    {a.ctors_[i].name, a.ctors_[j].name});

  // Compatibility (arity vs order): min(#K, #M) <= #L on every chain.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      if (!a.leq_[k * n + l]) continue;
      for (std::size_t m = 0; m < n; ++m) {
        if (!a.leq_[l * n + m]) continue;
        if (std::min(a.ctors_[k].arity, a.ctors_[m].arity) > a.ctors_[l].arity)
          throw Error(errc::incompatible,
                      "arity incompatible with order: " + a.ctors_[k].name +
                          " <= " + a.ctors_[l].name + " <= " +
                          a.ctors_[m].name + " but min(" +
                          std::to_string(a.ctors_[k].arity) + ", " +
                          std::to_string(a.ctors_[m].arity) + ") > " +
                          std::to_string(a.ctors_[l].arity),
                      {a.ctors_[k].name, a.ctors_[l].name, a.ctors_[m].name});
      }
    }

  if (!a.has_nullary())
    throw Error(errc::no_nullary,
                "alphabet has no nullary constructor; no monotypes exist");

  return a;
}

bool constructor_leq(const OrderedTypeAlphabet& alphabet, const std::string& k,
                     const std::string& l) {
  return alphabet.leq(k, l);
}

bool subtype(const OrderedTypeAlphabet& alphabet, const Type& sigma,
             const Type& tau) {
  if (sigma.is_parameter() || tau.is_parameter())
    return sigma.is_parameter() && tau.is_parameter() &&
           sigma.name() == tau.name();
  if (!alphabet.leq(sigma.name(), tau.name())) return false;
  const std::size_t shared = std::min(sigma.args().size(), tau.args().size());
  for (std::size_t i = 0; i < shared; ++i)
    if (!subtype(alphabet, sigma.args()[i], tau.args()[i])) return false;
  return true;
}

}  // namespace tyneq
