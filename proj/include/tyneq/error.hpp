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

#include <stdexcept>
#include <string>
#include <vector>

namespace tyneq {

enum class errc {
  unknown_constructor,
  order_cycle,
  incompatible,
  no_nullary,
  unsupported_arity,
  unknown_symbol,
  arity_mismatch,
  unbound_variable,
  parse_error,
  budget_exceeded,
  internal_witness_failure,
};

const char* errc_name(errc code);

/// Exception carrying a machine-readable code plus optional detail tokens
/// (e.g. the witnessing constructor triple of a compatibility violation).
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message, std::vector<std::string> details = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        details_(std::move(details)) {}

  errc code() const { return code_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  errc code_;
  std::vector<std::string> details_;
};

}  // namespace tyneq
