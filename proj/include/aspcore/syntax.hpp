// Copyright 2026 The aspcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASPCORE_SYNTAX_HPP
#define ASPCORE_SYNTAX_HPP

#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aspcore/diagnostics.hpp"
#include "aspcore/lexer.hpp"

namespace aspcore {

using Integer = boost::multiprecision::cpp_int;

enum class ArithOp { Negate, Add, Subtract, Multiply, Divide };

enum class Relation { Less, LessOrEqual, Equal, NotEqual, Greater, GreaterOrEqual };

enum class AggregateFunction { Count, Sum, Max, Min };

// `u rel x` holds exactly when `x inverse(rel) u` holds.
Relation inverse(Relation rel);
std::string_view relation_symbol(Relation rel);
std::string_view aggregate_function_name(AggregateFunction fn);

// Non-ground term. A tagged node rather than a variant: most passes only
// switch on `kind` and recurse into `args`.
struct Term {
  enum class Kind { Integer, Symbolic, String, Variable, Anonymous, Arithmetic, Functional };

  Kind kind = Kind::Integer;
  Integer value;           // Integer
  std::string name;        // Symbolic name, String content (escapes verbatim), Variable name, functor
  ArithOp op = ArithOp::Add;
  std::vector<Term> args;  // Arithmetic operands or Functional arguments

  static Term integer(Integer value);
  static Term symbolic(std::string name);
  static Term string(std::string content);
  static Term variable(std::string name);
  static Term anonymous();
  static Term negate(Term operand);
  static Term binary(ArithOp op, Term left, Term right);
  // f() is the symbolic constant f.
  static Term functional(std::string functor, std::vector<Term> args);

  bool is_ground() const;
  bool is_arithmetic() const { return kind == Kind::Arithmetic; }

  bool operator==(const Term&) const = default;
};

struct ClassicalAtom {
  bool negated = false;  // strong negation
  std::string predicate;
  std::vector<Term> args;

  std::size_t arity() const { return args.size(); }
  bool operator==(const ClassicalAtom&) const = default;
};

struct BuiltinAtom {
  Term left;
  Relation rel = Relation::Equal;
  Term right;

  bool operator==(const BuiltinAtom&) const = default;
};

struct Literal;

struct AggregateElement {
  std::vector<Term> terms;
  std::vector<Literal> condition;

  bool operator==(const AggregateElement&) const;
};

// `term rel` on the left (`u < #count{...}`) or `rel term` on the right.
struct Guard {
  Relation rel = Relation::Equal;
  Term term;

  bool operator==(const Guard&) const = default;
};

struct AggregateAtom {
  AggregateFunction function = AggregateFunction::Count;
  std::vector<AggregateElement> elements;
  std::optional<Guard> left;
  std::optional<Guard> right;

  bool operator==(const AggregateAtom&) const = default;
};

// A naf-literal or an aggregate literal. Conditions of aggregate and choice
// elements never hold aggregates, and `naf` is never set on a builtin atom.
struct Literal {
  bool naf = false;
  std::variant<ClassicalAtom, BuiltinAtom, AggregateAtom> atom;

  const ClassicalAtom* classical() const { return std::get_if<ClassicalAtom>(&atom); }
  const BuiltinAtom* builtin() const { return std::get_if<BuiltinAtom>(&atom); }
  const AggregateAtom* aggregate() const { return std::get_if<AggregateAtom>(&atom); }

  bool operator==(const Literal&) const = default;
};

inline bool AggregateElement::operator==(const AggregateElement& other) const {
  return terms == other.terms && condition == other.condition;
}

struct ChoiceElement {
  ClassicalAtom atom;
  std::vector<Literal> condition;

  bool operator==(const ChoiceElement&) const = default;
};

struct ChoiceAtom {
  std::vector<ChoiceElement> elements;
  std::optional<Guard> left;
  std::optional<Guard> right;

  bool operator==(const ChoiceAtom&) const = default;
};

struct Disjunction {
  std::vector<ClassicalAtom> atoms;  // empty for constraints

  bool operator==(const Disjunction&) const = default;
};

using Head = std::variant<Disjunction, ChoiceAtom>;

// Source position of the statement a node was parsed or rewritten from.
// Not part of structural equality.
struct Origin {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Rule {
  Head head;
  std::vector<Literal> body;
  Origin origin;

  const Disjunction* disjunction() const { return std::get_if<Disjunction>(&head); }
  const ChoiceAtom* choice() const { return std::get_if<ChoiceAtom>(&head); }
  bool is_constraint() const { return disjunction() != nullptr && disjunction()->atoms.empty(); }

  bool operator==(const Rule& other) const { return head == other.head && body == other.body; }
};

struct WeakConstraint {
  std::vector<Literal> body;
  Term weight;
  Term level = Term::integer(0);
  std::vector<Term> tuple;
  Origin origin;

  bool operator==(const WeakConstraint& other) const {
    return body == other.body && weight == other.weight && level == other.level && tuple == other.tuple;
  }
};

struct Query {
  ClassicalAtom atom;
  Origin origin;

  bool operator==(const Query& other) const { return atom == other.atom; }
};

struct Program {
  std::vector<Rule> rules;
  std::vector<WeakConstraint> weaks;
  std::optional<Query> query;

  bool operator==(const Program&) const = default;
};

struct ParseOptions {
  // Input is tool-generated core or ground text: reserved auxiliary names are
  // accepted and aggregate elements may hold arbitrary terms instead of only
  // the basic terms the standard grammar allows.
  bool core = false;
};

Program parse(std::span<const Token> tokens, const ParseOptions& options = {});
Program parse_text(std::string_view text, const ParseOptions& options = {});

// Canonical ASP-Core-2 text: rules, then weak constraints, then the query,
// one statement per line.
std::string pretty_print(const Program& program);
std::string to_string(const Term& term);
std::string to_string(const ClassicalAtom& atom);
std::string to_string(const Literal& literal);
std::string to_string(const AggregateElement& element);
std::string to_string(const Rule& rule);
std::string to_string(const WeakConstraint& weak);
std::string to_string(const Query& query);

// Structural dump of the AST as JSON text.
std::string ast_json(const Program& program, int indent = 2);

// Variable names occurring in a term, atom or literal (anonymous variables excluded).
void collect_variables(const Term& term, std::set<std::string>& out);
void collect_variables(const ClassicalAtom& atom, std::set<std::string>& out);
void collect_variables(const Literal& literal, std::set<std::string>& out);
void collect_variables(const AggregateElement& element, std::set<std::string>& out);

}  // namespace aspcore

#endif  // ASPCORE_SYNTAX_HPP
