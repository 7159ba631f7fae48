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

#include "tyneq/problem.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "tyneq/error.hpp"

namespace tyneq {

namespace {

enum class Tok {
  ident,
  nat,
  colon,
  comma,
  slash,
  lparen,
  rparen,
  star,
  arrow,
  leq,
  tick,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int col = 1;
};

std::string where(const Token& t) {
  return "line " + std::to_string(t.line) + ", column " +
         std::to_string(t.col) + ": ";
}

[[noreturn]] void fail(const Token& t, const std::string& message,
                       errc code = errc::parse_error,
                       std::vector<std::string> details = {}) {
  throw Error(code, where(t) + message, std::move(details));
}

struct Lexer {
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_blank();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;

    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        t.text += take();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::nat;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        t.text += take();
      return t;
    }

    if (c == '-' || c == '<') {
      const char second = c == '-' ? '>' : '=';
      if (pos_ + 1 >= src_.size() || src_[pos_ + 1] != second)
        fail(t, std::string("unexpected character '") + c + "'");
      t.kind = c == '-' ? Tok::arrow : Tok::leq;
      t.text += take();
      t.text += take();
      return t;
    }

    switch (c) {
      case ':': t.kind = Tok::colon; break;
      case ',': t.kind = Tok::comma; break;
      case '/': t.kind = Tok::slash; break;
      case '(': t.kind = Tok::lparen; break;
      case ')': t.kind = Tok::rparen; break;
      case '*': t.kind = Tok::star; break;
      case '\'': t.kind = Tok::tick; break;
      default:
        fail(t, std::string("unexpected character '") + c + "'");
    }
    t.text = take();
    return t;
  }

 private:
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        return;
      }
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_section_keyword(const std::string& name) {
  return name == "alphabet" || name == "order" || name == "signatures" ||
         name == "term" || name == "solve" || name == "subtype";
}

struct ProblemParser {
  explicit ProblemParser(const std::string& text) : lexer_(text) {
    current_ = lexer_.next();
  }

  Problem parse() {
    Token alpha_tok = expect_keyword("alphabet");
    expect(Tok::colon, "':'");
    std::vector<TypeConstructor> ctors;
    ctors.push_back(parse_ctor());
    while (current_.kind == Tok::comma) {
      advance();
      ctors.push_back(parse_ctor());
    }

    std::vector<std::pair<std::string, std::string>> pairs;
    if (at_keyword("order")) {
      advance();
      expect(Tok::colon, "':'");
      while (current_.kind == Tok::ident &&
             !is_section_keyword(current_.text)) {
        Token lo = expect(Tok::ident, "constructor name");
        require_ctor(ctors, lo);
        expect(Tok::leq, "'<='");
        Token hi = expect(Tok::ident, "constructor name");
        require_ctor(ctors, hi);
        pairs.emplace_back(lo.text, hi.text);
      }
    }

    Problem problem = [&] {
      try {
        return Problem{validate_alphabet(std::move(ctors), pairs), {}, {}};
      } catch (const Error& e) {
        throw Error(e.code(), where(alpha_tok) + e.what(), e.details());
      }
    }();

    if (at_keyword("signatures")) {
      advance();
      expect(Tok::colon, "':'");
      while (current_.kind == Tok::ident &&
             !is_section_keyword(current_.text)) {
        Token fn = expect(Tok::ident, "function symbol");
        expect(Tok::colon, "':'");
        Signature sig;
        sig.fn = fn.text;
        Type first = parse_type(problem.alphabet);
        if (current_.kind == Tok::star || current_.kind == Tok::arrow) {
          sig.domain.push_back(std::move(first));
          while (current_.kind == Tok::star) {
            advance();
            sig.domain.push_back(parse_type(problem.alphabet));
          }
          expect(Tok::arrow, "'->'");
          sig.codomain = parse_type(problem.alphabet);
        } else {
          sig.codomain = std::move(first);
        }
        if (!problem.signatures.emplace(fn.text, std::move(sig)).second)
          fail(fn, "signature for '" + fn.text + "' declared twice");
      }
    }

    if (at_keyword("term")) {
      advance();
      expect(Tok::colon, "':'");
      problem.payload = parse_term(problem.signatures);
    } else if (at_keyword("solve")) {
      advance();
      expect(Tok::colon, "':'");
      std::vector<TypeInequation> ineqs;
      while (current_.kind == Tok::tick ||
             (current_.kind == Tok::ident &&
              !is_section_keyword(current_.text))) {
        Type lhs = parse_type(problem.alphabet);
        expect(Tok::leq, "'<='");
        Type rhs = parse_type(problem.alphabet);
        ineqs.push_back({std::move(lhs), std::move(rhs)});
      }
      problem.payload = InequationSystem(std::move(ineqs));
    } else if (at_keyword("subtype")) {
      advance();
      expect(Tok::colon, "':'");
      Type lhs = parse_type(problem.alphabet);
      expect(Tok::comma, "','");
      Type rhs = parse_type(problem.alphabet);
      problem.payload = std::make_pair(std::move(lhs), std::move(rhs));
    }

    if (current_.kind != Tok::end)
      fail(current_, "unexpected trailing input starting at '" +
                         current_.text + "'");
    return problem;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  Token expect(Tok kind, const std::string& what) {
    if (current_.kind != kind)
      fail(current_, "expected " + what +
                         (current_.kind == Tok::end
                              ? ", found end of input"
                              : ", found '" + current_.text + "'"));
    Token t = current_;
    advance();
    return t;
  }

  bool at_keyword(const std::string& name) const {
    return current_.kind == Tok::ident && current_.text == name;
  }

  Token expect_keyword(const std::string& name) {
    if (!at_keyword(name))
      fail(current_, "expected '" + name + "' section");
    Token t = current_;
    advance();
    return t;
  }

  TypeConstructor parse_ctor() {
    Token name = expect(Tok::ident, "constructor name");
    expect(Tok::slash, "'/'");
    Token arity = expect(Tok::nat, "arity");
    return {name.text, std::stoi(arity.text)};
  }

  static void require_ctor(const std::vector<TypeConstructor>& ctors,
                           const Token& name) {
    for (const TypeConstructor& c : ctors)
      if (c.name == name.text) return;
    fail(name, "unknown type constructor '" + name.text + "'",
         errc::unknown_constructor, {name.text});
  }

  Type parse_type(const OrderedTypeAlphabet& alphabet) {
    if (current_.kind == Tok::tick) {
      advance();
      Token name = expect(Tok::ident, "parameter name");
      return Type::parameter(name.text);
    }
    Token name = expect(Tok::ident, "type");
    auto idx = alphabet.find(name.text);
    if (!idx)
      fail(name, "unknown type constructor '" + name.text + "'",
           errc::unknown_constructor, {name.text});
    std::vector<Type> args;
    if (current_.kind == Tok::lparen) {
      advance();
      args.push_back(parse_type(alphabet));
      while (current_.kind == Tok::comma) {
        advance();
        args.push_back(parse_type(alphabet));
      }
      expect(Tok::rparen, "')'");
    }
    const int declared = alphabet.constructors()[*idx].arity;
    if (static_cast<int>(args.size()) != declared)
      fail(name,
           "'" + name.text + "' has arity " + std::to_string(declared) +
               ", applied to " + std::to_string(args.size()) + " arguments",
           errc::arity_mismatch,
           {name.text, std::to_string(declared), std::to_string(args.size())});
    return Type::application(name.text, std::move(args));
  }

  Term parse_term(const SignatureTable& signatures) {
    Token name = expect(Tok::ident, "term");
    std::vector<Term> args;
    if (current_.kind == Tok::lparen) {
      advance();
      args.push_back(parse_term(signatures));
      while (current_.kind == Tok::comma) {
        advance();
        args.push_back(parse_term(signatures));
      }
      expect(Tok::rparen, "')'");
      return Term::application(name.text, std::move(args));
    }
    // A bare identifier is a constant when a signature declares it and a
    // term variable otherwise.
    if (signatures.count(name.text))
      return Term::application(name.text);
    return Term::variable(name.text);
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

Problem parse_problem(const std::string& text) {
  return ProblemParser(text).parse();
}

std::string serialize_problem(const Problem& problem) {
  std::ostringstream out;

  out << "alphabet: ";
  const auto& ctors = problem.alphabet.constructors();
  for (std::size_t i = 0; i < ctors.size(); ++i) {
    if (i) out << ", ";
    out << ctors[i].name << '/' << ctors[i].arity;
  }
  out << '\n';

  std::string order_entries;
  for (const auto& [lo, hi] : problem.alphabet.closure_pairs())
    if (lo != hi) order_entries += "  " + lo + " <= " + hi + "\n";
  if (!order_entries.empty()) out << "order:\n" << order_entries;

  if (!problem.signatures.empty()) {
    out << "signatures:\n";
    for (const auto& [fn, sig] : problem.signatures) {
      out << "  " << fn << ": ";
      for (std::size_t i = 0; i < sig.domain.size(); ++i) {
        if (i) out << " * ";
        out << sig.domain[i].to_string();
      }
      if (!sig.domain.empty()) out << " -> ";
      out << sig.codomain.to_string() << '\n';
    }
  }

  if (const Term* term = std::get_if<Term>(&problem.payload)) {
    out << "term: " << term->to_string() << '\n';
  } else if (const InequationSystem* system =
                 std::get_if<InequationSystem>(&problem.payload)) {
    out << "solve:\n";
    for (const TypeInequation& i : system->inequations())
      out << "  " << i.lhs.to_string() << " <= " << i.rhs.to_string() << '\n';
  } else if (const auto* pair =
                 std::get_if<std::pair<Type, Type>>(&problem.payload)) {
    out << "subtype: " << pair->first.to_string() << ", "
        << pair->second.to_string() << '\n';
  }

  return out.str();
}

}  // namespace tyneq
