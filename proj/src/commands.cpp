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

#include "tyneq/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tyneq/oracle.hpp"
#include "tyneq/solver.hpp"

namespace tyneq {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr int kExitOracleDisagreement = 3;

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

json witness_json(const ParameterSubstitution& witness) {
  json w = json::object();
  for (const auto& [name, image] : witness.bindings())
    w[name] = image.to_string();
  return w;
}

json stats_json(const SolveStats& stats) {
  return json{{"generations", stats.generations},
              {"systems_explored", stats.systems_explored},
              {"memory_size", stats.memory_size}};
}

void print_trace(const SolveStats& stats, std::ostream& err) {
  for (std::size_t n = 0; n < stats.frontier_sizes.size(); ++n)
    err << "frontier " << n << ": " << stats.frontier_sizes[n] << '\n';
}

const Term& require_term(const Problem& problem) {
  if (!problem.has_term())
    throw Error(errc::parse_error,
                "problem file has no 'term' section (required by this "
                "command)");
  return std::get<Term>(problem.payload);
}

SolveResult run_solver(const InequationSystem& system, const Problem& problem,
                       const CliOptions& options, std::ostream& err) {
  SolveOptions solve_options;
  solve_options.mode =
      options.serial ? ExpandMode::serial : ExpandMode::parallel;
  SolveResult result = solve(system, problem.alphabet, solve_options);
  if (options.trace) print_trace(result.stats, err);
  return result;
}

/// Oracle depth that is guaranteed to find a solution whenever the
/// solver did: a positive verdict at generation g implies a closed
/// solution of depth <= g.
int oracle_depth(const SolveStats& stats) {
  return std::max<int>(3, static_cast<int>(stats.generations));
}

}  // namespace

int cmd_validate(const Problem& problem, const CliOptions& options,
                 std::ostream& out) {
  // parse_problem already ran the validator; reaching this point means
  // the alphabet is well-formed. Report the closure.
  if (options.json) {
    json ctors = json::array();
    for (const TypeConstructor& c : problem.alphabet.constructors())
      ctors.push_back(json{{"name", c.name}, {"arity", c.arity}});
    json closure = json::array();
    for (const auto& [lo, hi] : problem.alphabet.closure_pairs())
      closure.push_back(json::array({lo, hi}));
    emit(out, json{{"schema", 1},
                   {"verdict", "valid"},
                   {"constructors", ctors},
                   {"closure", closure}});
    return kExitPositive;
  }

  out << "valid\nconstructors:";
  for (const TypeConstructor& c : problem.alphabet.constructors())
    out << ' ' << c.name << '/' << c.arity;
  out << "\nclosure:";
  for (const auto& [lo, hi] : problem.alphabet.closure_pairs())
    out << ' ' << lo << "<=" << hi;
  out << '\n';
  return kExitPositive;
}

int cmd_subtype(const Problem& problem, const CliOptions& options,
                std::ostream& out) {
  if (!problem.has_type_pair())
    throw Error(errc::parse_error,
                "problem file has no 'subtype' section (required by this "
                "command)");
  const auto& [lhs, rhs] = std::get<std::pair<Type, Type>>(problem.payload);
  const bool holds = subtype(problem.alphabet, lhs, rhs);

  if (options.json) {
    emit(out, json{{"schema", 1},
                   {"verdict", holds ? "subtype" : "not-subtype"},
                   {"lhs", lhs.to_string()},
                   {"rhs", rhs.to_string()}});
  } else {
    out << lhs.to_string() << " <= " << rhs.to_string()
        << (holds ? " holds\n" : " does not hold\n");
  }
  return holds ? kExitPositive : kExitNegative;
}

int cmd_gen(const Problem& problem, const CliOptions& options,
            std::ostream& out) {
  const Term& term = require_term(problem);
  FreshNames fresh;
  auto [gamma, tau] = init_context(term, fresh);
  InequationSystem system =
      gen_constraints(gamma, term, tau, problem.signatures, fresh);

  if (options.json) {
    json context = json::object();
    for (const auto& [var, type] : gamma.bindings)
      context[var] = type.to_string();
    json ineqs = json::array();
    for (const TypeInequation& i : system.inequations())
      ineqs.push_back(
          json{{"lhs", i.lhs.to_string()}, {"rhs", i.rhs.to_string()}});
    emit(out, json{{"schema", 1},
                   {"term", term.to_string()},
                   {"context", context},
                   {"type", tau.to_string()},
                   {"system", ineqs}});
    return kExitPositive;
  }

  out << "term: " << term.to_string() << "\ncontext:";
  for (const auto& [var, type] : gamma.bindings)
    out << ' ' << var << ':' << type.to_string();
  out << "\ntype: " << tau.to_string() << "\nsystem:\n";
  for (const TypeInequation& i : system.inequations())
    out << "  " << i.to_string() << '\n';
  return kExitPositive;
}

int cmd_solve(const Problem& problem, const CliOptions& options,
              std::ostream& out, std::ostream& err) {
  if (!problem.has_system())
    throw Error(errc::parse_error,
                "problem file has no 'solve' section (required by this "
                "command)");
  const auto& system = std::get<InequationSystem>(problem.payload);
  SolveResult result = run_solver(system, problem, options, err);

  if (options.oracle) {
    const bool oracle_verdict =
        brute_solvable(system, oracle_depth(result.stats), problem.alphabet);
    if (oracle_verdict != result.verdict) {
      err << "oracle disagreement: solver says "
          << (result.verdict ? "solvable" : "unsolvable") << ", oracle says "
          << (oracle_verdict ? "solvable" : "unsolvable") << '\n';
      return kExitOracleDisagreement;
    }
  }

  if (options.json) {
    json doc{{"schema", 1},
             {"verdict", result.verdict ? "solvable" : "unsolvable"}};
    if (result.witness) doc["witness"] = witness_json(*result.witness);
    doc["stats"] = stats_json(result.stats);
    emit(out, doc);
  } else {
    out << (result.verdict ? "solvable" : "unsolvable") << '\n';
    if (result.witness)
      out << "witness: " << result.witness->to_string() << '\n';
    out << "generations: " << result.stats.generations
        << ", systems explored: " << result.stats.systems_explored
        << ", memory: " << result.stats.memory_size << '\n';
  }
  return result.verdict ? kExitPositive : kExitNegative;
}

int cmd_check(const Problem& problem, const CliOptions& options,
              std::ostream& out, std::ostream& err) {
  const Term& term = require_term(problem);
  FreshNames fresh;
  auto [gamma, tau] = init_context(term, fresh);
  InequationSystem system =
      gen_constraints(gamma, term, tau, problem.signatures, fresh);
  SolveResult result = run_solver(system, problem, options, err);

  if (options.oracle) {
    OracleBudget budget;
    budget.max_depth = oracle_depth(result.stats);
    const bool oracle_verdict =
        brute_typable(term, problem.signatures, problem.alphabet, budget);
    if (oracle_verdict != result.verdict) {
      err << "oracle disagreement: solver says "
          << (result.verdict ? "typable" : "untypable") << ", oracle says "
          << (oracle_verdict ? "typable" : "untypable") << '\n';
      return kExitOracleDisagreement;
    }
  }

  if (options.json) {
    json doc{{"schema", 1},
             {"verdict", result.verdict ? "typable" : "untypable"}};
    if (result.verdict) {
      doc["type"] = result.witness->apply(tau).to_string();
      json assignment = json::object();
      for (const auto& [var, type] : gamma.bindings)
        assignment[var] = result.witness->apply(type).to_string();
      doc["assignment"] = assignment;
      doc["witness"] = witness_json(*result.witness);
    }
    doc["stats"] = stats_json(result.stats);
    emit(out, doc);
  } else {
    out << (result.verdict ? "typable" : "untypable") << '\n';
    if (result.verdict) {
      out << "type: " << result.witness->apply(tau).to_string() << '\n';
      for (const auto& [var, type] : gamma.bindings)
        out << "  " << var << ": " << result.witness->apply(type).to_string()
            << '\n';
    }
    out << "generations: " << result.stats.generations
        << ", systems explored: " << result.stats.systems_explored
        << ", memory: " << result.stats.memory_size << '\n';
  }
  return result.verdict ? kExitPositive : kExitNegative;
}

namespace {

const char kUsage[] =
    "usage: tyneq <command> <file> [flags]\n"
    "\n"
    "commands:\n"
    "  validate FILE   check the alphabet: order closure, arity/order\n"
    "                  compatibility, nullary constructor\n"
    "  subtype FILE    decide the file's subtype query\n"
    "  gen FILE        print the constraint system for the file's term\n"
    "  solve FILE      decide solvability of the file's system\n"
    "  check FILE      decide typability of the file's term\n"
    "\n"
    "flags:\n"
    "  --json          machine-readable output on stdout\n"
    "  --trace         frontier size per generation on stderr (solve, check)\n"
    "  --oracle        cross-check the verdict against the brute-force\n"
    "                  oracle (solve, check)\n"
    "  --serial        serial expansion kernel instead of the parallel one\n"
    "                  (solve, check)\n"
    "\n"
    "exit codes: 0 positive verdict, 1 negative verdict, 2 input error,\n"
    "3 oracle disagreement\n";

int render_error(const Error& e, const CliOptions& options, std::ostream& out,
                 std::ostream& err) {
  if (options.json) {
    json details = json::array();
    for (const std::string& d : e.details()) details.push_back(d);
    emit(out, json{{"schema", 1},
                   {"error",
                    {{"code", errc_name(e.code())},
                     {"message", e.what()},
                     {"details", details}}}});
  } else {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  if (!args.empty() && (args[0] == "--help" || args[0] == "-h")) {
    out << kUsage;
    return kExitPositive;
  }
  if (args.size() < 2) {
    err << kUsage;
    return kExitError;
  }

  const std::string& command = args[0];
  const std::string& path = args[1];
  CliOptions options;
  for (std::size_t i = 2; i < args.size(); ++i) {
    const std::string& flag = args[i];
    if (flag == "--trace") {
      options.trace = true;
    } else if (flag == "--oracle") {
      options.oracle = true;
    } else if (flag == "--json") {
      options.json = true;
    } else if (flag == "--serial") {
      options.serial = true;
    } else {
      err << "unknown flag: " << flag << '\n' << kUsage;
      return kExitError;
    }
  }

  const bool is_solver_command = command == "solve" || command == "check";
  if ((options.trace || options.oracle || options.serial) &&
      !is_solver_command) {
    err << "--trace/--oracle/--serial only apply to solve and check\n";
    return kExitError;
  }

  std::ifstream file(path);
  if (!file) {
    err << "cannot open file: " << path << '\n';
    return kExitError;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();

  try {
    Problem problem = parse_problem(buffer.str());
    if (command == "validate") return cmd_validate(problem, options, out);
    if (command == "subtype") return cmd_subtype(problem, options, out);
    if (command == "gen") return cmd_gen(problem, options, out);
    if (command == "solve") return cmd_solve(problem, options, out, err);
    if (command == "check") return cmd_check(problem, options, out, err);
    err << "unknown command: " << command << '\n' << kUsage;
    return kExitError;
  } catch (const Error& e) {
    return render_error(e, options, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace tyneq
