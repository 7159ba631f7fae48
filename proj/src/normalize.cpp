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

#include "tyneq/normalize.hpp"

#include <vector>

namespace tyneq {

namespace {

void ensure_unary(const Type& t) {
  if (t.is_parameter()) return;
  if (t.args().size() > 1)
    throw Error(errc::unsupported_arity,
                "constructor '" + t.name() + "' applied to " +
                    std::to_string(t.args().size()) +
                    " arguments; the solver handles arity <= 1 only",
                {t.name()});
  for (const Type& arg : t.args()) ensure_unary(arg);
}

NormalizedInequation nf_rec(const Type& lhs, const Type& rhs,
                            const OrderedTypeAlphabet& alphabet) {
  if (lhs.is_parameter() || rhs.is_parameter())
    return NormalizedInequation::keep({lhs, rhs});
  if (!alphabet.leq(lhs.name(), rhs.name()))
    return NormalizedInequation::falsity();
  if (!lhs.args().empty() && !rhs.args().empty())
    return nf_rec(lhs.args()[0], rhs.args()[0], alphabet);
  return NormalizedInequation::truth();
}

}  // namespace

NormalizedInequation nf_ineq(const TypeInequation& inequation,
                             const OrderedTypeAlphabet& alphabet) {
  ensure_unary(inequation.lhs);
  ensure_unary(inequation.rhs);
  return nf_rec(inequation.lhs, inequation.rhs, alphabet);
}

NormalizedSystem nf_system(const InequationSystem& system,
                           const OrderedTypeAlphabet& alphabet) {
  std::vector<TypeInequation> kept;
  for (const TypeInequation& i : system.inequations()) {
    NormalizedInequation n = nf_ineq(i, alphabet);
    switch (n.kind) {
      case NormalizedInequation::Kind::is_false:
        return NormalizedSystem::false_system();
      case NormalizedInequation::Kind::is_true:
        break;
      case NormalizedInequation::Kind::kept:
        kept.push_back(std::move(n.inequation));
        break;
    }
  }
  return NormalizedSystem(InequationSystem(std::move(kept)));
}

}  // namespace tyneq
