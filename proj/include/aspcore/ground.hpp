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

#ifndef ASPCORE_GROUND_HPP
#define ASPCORE_GROUND_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "aspcore/syntax.hpp"

namespace aspcore {

// ---- ground terms ---------------------------------------------------------

struct GroundTerm {
  enum class Kind { Integer, Symbolic, String, Functional };

  Kind kind = Kind::Integer;
  Integer value;
  std::string name;  // symbolic constant, string content or functor
  std::vector<GroundTerm> args;

  static GroundTerm integer(Integer value);
  static GroundTerm symbolic(std::string name);
  static GroundTerm string(std::string content);
  static GroundTerm functional(std::string functor, std::vector<GroundTerm> args);

  bool is_integer() const { return kind == Kind::Integer; }
  // Constants have depth 0, f(a) has depth 1.
  std::size_t depth() const;

  bool operator==(const GroundTerm&) const = default;
  std::strong_ordering operator<=>(const GroundTerm& other) const;
};

// The total order on ground terms: integers numerically, then symbolic
// constants, then strings (both byte-wise), then functional terms by arity,
// functor and argument tuple.
std::strong_ordering term_compare(const GroundTerm& t, const GroundTerm& u);

// `t rel u` under term_compare.
bool compare_holds(const GroundTerm& t, Relation rel, const GroundTerm& u);

std::string to_string(const GroundTerm& term);
Term to_term(const GroundTerm& term);
// nullopt if the term holds variables or arithmetic.
std::optional<GroundTerm> to_ground(const Term& term);

using Substitution = std::map<std::string, GroundTerm>;

// Applies sigma and evaluates arithmetic subterms over unbounded integers.
// Division truncates toward zero. nullopt when some arithmetic subterm is
// undefined (non-integer operand or division by zero). Throws
// std::invalid_argument if a variable of `term` is not in sigma.
std::optional<GroundTerm> eval_arithmetic(const Term& term, const Substitution& sigma);

// ---- ground programs ------------------------------------------------------

struct GroundAtom {
  bool negated = false;
  std::string predicate;
  std::vector<GroundTerm> args;

  bool operator==(const GroundAtom&) const = default;
  // The atom read as a term (p, then p(...)), positive before negated.
  std::strong_ordering operator<=>(const GroundAtom& other) const;
};

struct GroundBuiltin {
  GroundTerm left;
  Relation rel = Relation::Equal;
  GroundTerm right;

  bool holds() const { return compare_holds(left, rel, right); }
  bool operator==(const GroundBuiltin&) const = default;
};

// Element conditions hold atoms and builtins only.
struct GroundConditionLiteral {
  bool naf = false;
  std::variant<GroundAtom, GroundBuiltin> atom;

  bool operator==(const GroundConditionLiteral&) const = default;
};

struct GroundAggregateElement {
  std::vector<GroundTerm> terms;
  std::vector<GroundConditionLiteral> condition;

  bool operator==(const GroundAggregateElement&) const = default;
};

struct GroundAggregate {
  AggregateFunction function = AggregateFunction::Count;
  std::vector<GroundAggregateElement> elements;  // canonical order, no duplicates
  Relation rel = Relation::GreaterOrEqual;
  GroundTerm bound;

  bool operator==(const GroundAggregate&) const = default;
};

struct GroundLiteral {
  bool naf = false;
  std::variant<GroundAtom, GroundBuiltin, GroundAggregate> atom;

  const GroundAtom* classical() const { return std::get_if<GroundAtom>(&atom); }
  const GroundBuiltin* builtin() const { return std::get_if<GroundBuiltin>(&atom); }
  const GroundAggregate* aggregate() const { return std::get_if<GroundAggregate>(&atom); }

  bool operator==(const GroundLiteral&) const = default;
};

struct GroundRule {
  std::vector<GroundAtom> head;  // empty for constraints
  std::vector<GroundLiteral> body;

  bool operator==(const GroundRule&) const = default;
};

struct GroundWeakConstraint {
  std::vector<GroundLiteral> body;
  GroundTerm weight;
  GroundTerm level;
  std::vector<GroundTerm> tuple;

  bool operator==(const GroundWeakConstraint&) const = default;
};

struct GroundProgram {
  std::vector<GroundRule> rules;
  std::vector<GroundWeakConstraint> weaks;
  std::optional<Query> query;  // kept non-ground

  bool operator==(const GroundProgram&) const = default;
};

std::string to_string(const GroundAtom& atom);
std::string to_string(const GroundLiteral& literal);
std::string to_string(const GroundAggregateElement& element);
std::string to_string(const GroundRule& rule);
std::string to_string(const GroundWeakConstraint& weak);
// One statement per line: rules, weak constraints (each group sorted), query.
std::string pretty_print(const GroundProgram& program);

// Back to the non-ground AST (for printing through the ordinary parser path).
ClassicalAtom to_classical(const GroundAtom& atom);

// Atoms derivable when negation and aggregates are ignored: the least set
// closed under rules whose positive classical body atoms are in it and
// whose builtins hold. Every answer set is a subset.
std::set<GroundAtom> possibly_derivable(const GroundProgram& program);

// ---- instantiation --------------------------------------------------------

struct UniverseBounds {
  Integer max_int = 1000;       // integers in [-max_int, max_int]
  std::size_t max_nesting = 4;  // functional terms up to this depth
};

// The finite part of the Herbrand universe admitted by the bounds: the
// integers in range, the program's constants and strings, and functional
// terms over the program's functors (auxiliary functors excluded).
class Universe {
 public:
  static Universe build(const Program& program, const UniverseBounds& bounds, std::size_t capacity = 200000);

  const std::vector<GroundTerm>& terms() const { return terms_; }
  bool within(const GroundTerm& term) const;

 private:
  std::vector<GroundTerm> terms_;
  UniverseBounds bounds_;
};

// Every arithmetic subterm outside aggregate elements evaluates under sigma.
bool is_well_formed(const Rule& rule, const Substitution& sigma);
bool is_well_formed(const WeakConstraint& weak, const Substitution& sigma);
// Every arithmetic subterm of the element evaluates under sigma.
bool is_well_formed(const AggregateElement& element, const Substitution& sigma);

// {e under sigma | sigma extends `context` with a well-formed substitution of the element's
// remaining variables over `universe`}, in canonical order.
std::vector<GroundAggregateElement> instantiate_element(const AggregateElement& element, const Universe& universe,
                                                        const Substitution& context);

struct GroundOptions {
  UniverseBounds bounds;
  // Enumerate every substitution over the bounded universe instead of joining
  // against derivable atoms.
  bool naive = false;
  std::size_t max_instances = 20'000'000;
};

struct GroundStats {
  std::size_t rule_instances = 0;
  // Variable bindings that left the universe bounds without appearing in a
  // derivable atom (e.g. an intermediate `Y = X*10`). Naive grounding cannot
  // produce these.
  std::size_t out_of_bound_bindings = 0;
};

// Expects a desugared program that passed the safety and recursion checks.
// Throws BoundExceeded when a derivable atom leaves the bounds and
// CapacityExceeded when instantiation grows past `max_instances`.
GroundProgram ground_program(const Program& program, const GroundOptions& options = {}, GroundStats* stats = nullptr);

}  // namespace aspcore

#endif  // ASPCORE_GROUND_HPP
