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

// Ground statements are printed by mapping them back onto the AST, so ground
// and non-ground output share one canonical syntax.

#include <algorithm>

#include "aspcore/ground.hpp"
#include "ground_internal.hpp"

namespace aspcore {

namespace {

Literal condition_literal(const GroundConditionLiteral& literal) {
  if (const auto* a = std::get_if<GroundAtom>(&literal.atom)) return Literal{literal.naf, to_classical(*a)};
  const auto& b = std::get<GroundBuiltin>(literal.atom);
  return Literal{literal.naf, BuiltinAtom{to_term(b.left), b.rel, to_term(b.right)}};
}

AggregateElement to_element(const GroundAggregateElement& element) {
  AggregateElement out;
  for (const auto& t : element.terms) out.terms.push_back(to_term(t));
  for (const auto& l : element.condition) out.condition.push_back(condition_literal(l));
  return out;
}

std::vector<Literal> to_body(const std::vector<GroundLiteral>& body) {
  std::vector<Literal> out;
  for (const auto& l : body) out.push_back(to_literal(l));
  return out;
}

Rule to_rule(const GroundRule& rule) {
  Disjunction head;
  for (const auto& a : rule.head) head.atoms.push_back(to_classical(a));
  return Rule{std::move(head), to_body(rule.body), {}};
}

WeakConstraint to_weak(const GroundWeakConstraint& weak) {
  WeakConstraint out;
  out.body = to_body(weak.body);
  out.weight = to_term(weak.weight);
  out.level = to_term(weak.level);
  for (const auto& t : weak.tuple) out.tuple.push_back(to_term(t));
  return out;
}

}  // namespace

Literal to_literal(const GroundLiteral& literal) {
  if (const auto* a = literal.classical()) return Literal{literal.naf, to_classical(*a)};
  if (const auto* b = literal.builtin()) {
    return Literal{literal.naf, BuiltinAtom{to_term(b->left), b->rel, to_term(b->right)}};
  }
  const auto& g = *literal.aggregate();
  AggregateAtom atom;
  atom.function = g.function;
  for (const auto& e : g.elements) atom.elements.push_back(to_element(e));
  atom.right = Guard{g.rel, to_term(g.bound)};
  return Literal{literal.naf, std::move(atom)};
}

std::string to_string(const GroundAtom& atom) { return to_string(to_classical(atom)); }

std::string to_string(const GroundLiteral& literal) { return to_string(to_literal(literal)); }

std::string to_string(const GroundAggregateElement& element) { return to_string(to_element(element)); }

std::string to_string(const GroundRule& rule) { return to_string(to_rule(rule)); }

std::string to_string(const GroundWeakConstraint& weak) { return to_string(to_weak(weak)); }

std::string pretty_print(const GroundProgram& program) {
  std::vector<std::string> rules;
  for (const auto& r : program.rules) rules.push_back(to_string(r));
  std::vector<std::string> weaks;
  for (const auto& w : program.weaks) weaks.push_back(to_string(w));
  std::sort(rules.begin(), rules.end());
  std::sort(weaks.begin(), weaks.end());
  std::string out;
  for (const auto& line : rules) out += line + "\n";
  for (const auto& line : weaks) out += line + "\n";
  if (program.query) out += to_string(*program.query) + "\n";
  return out;
}

}  // namespace aspcore
