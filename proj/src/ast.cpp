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

#include <algorithm>

#include "aspcore/syntax.hpp"

namespace aspcore {

Relation inverse(Relation rel) {
  switch (rel) {
    case Relation::Less: return Relation::Greater;
    case Relation::LessOrEqual: return Relation::GreaterOrEqual;
    case Relation::Equal: return Relation::Equal;
    case Relation::NotEqual: return Relation::NotEqual;
    case Relation::Greater: return Relation::Less;
    case Relation::GreaterOrEqual: return Relation::LessOrEqual;
  }
  return rel;
}

std::string_view relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::Less: return "<";
    case Relation::LessOrEqual: return "<=";
    case Relation::Equal: return "=";
    case Relation::NotEqual: return "!=";
    case Relation::Greater: return ">";
    case Relation::GreaterOrEqual: return ">=";
  }
  return "?";
}

std::string_view aggregate_function_name(AggregateFunction fn) {
  switch (fn) {
    case AggregateFunction::Count: return "#count";
    case AggregateFunction::Sum: return "#sum";
    case AggregateFunction::Max: return "#max";
    case AggregateFunction::Min: return "#min";
  }
  return "#?";
}

Term Term::integer(Integer value) {
  Term t;
  t.kind = Kind::Integer;
  t.value = std::move(value);
  return t;
}

Term Term::symbolic(std::string name) {
  Term t;
  t.kind = Kind::Symbolic;
  t.name = std::move(name);
  return t;
}

Term Term::string(std::string content) {
  Term t;
  t.kind = Kind::String;
  t.name = std::move(content);
  return t;
}

Term Term::variable(std::string name) {
  Term t;
  t.kind = Kind::Variable;
  t.name = std::move(name);
  return t;
}

Term Term::anonymous() {
  Term t;
  t.kind = Kind::Anonymous;
  return t;
}

Term Term::negate(Term operand) {
  Term t;
  t.kind = Kind::Arithmetic;
  t.op = ArithOp::Negate;
  t.args.push_back(std::move(operand));
  return t;
}

Term Term::binary(ArithOp op, Term left, Term right) {
  Term t;
  t.kind = Kind::Arithmetic;
  t.op = op;
  t.args.push_back(std::move(left));
  t.args.push_back(std::move(right));
  return t;
}

Term Term::functional(std::string functor, std::vector<Term> args) {
  if (args.empty()) return symbolic(std::move(functor));
  Term t;
  t.kind = Kind::Functional;
  t.name = std::move(functor);
  t.args = std::move(args);
  return t;
}

bool Term::is_ground() const {
  if (kind == Kind::Variable || kind == Kind::Anonymous) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

void collect_variables(const Term& term, std::set<std::string>& out) {
  if (term.kind == Term::Kind::Variable) {
    out.insert(term.name);
    return;
  }
  for (const auto& arg : term.args) collect_variables(arg, out);
}

void collect_variables(const ClassicalAtom& atom, std::set<std::string>& out) {
  for (const auto& arg : atom.args) collect_variables(arg, out);
}

void collect_variables(const AggregateElement& element, std::set<std::string>& out) {
  for (const auto& t : element.terms) collect_variables(t, out);
  for (const auto& l : element.condition) collect_variables(l, out);
}

void collect_variables(const Literal& literal, std::set<std::string>& out) {
  if (const auto* a = literal.classical()) {
    collect_variables(*a, out);
  } else if (const auto* b = literal.builtin()) {
    collect_variables(b->left, out);
    collect_variables(b->right, out);
  } else if (const auto* g = literal.aggregate()) {
    if (g->left) collect_variables(g->left->term, out);
    if (g->right) collect_variables(g->right->term, out);
    for (const auto& e : g->elements) collect_variables(e, out);
  }
}

}  // namespace aspcore
