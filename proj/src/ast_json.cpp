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

#include <json.hpp>

#include "aspcore/syntax.hpp"

namespace aspcore {

namespace {

using nlohmann::json;

std::string_view op_name(ArithOp op) {
  switch (op) {
    case ArithOp::Negate: return "neg";
    case ArithOp::Add: return "+";
    case ArithOp::Subtract: return "-";
    case ArithOp::Multiply: return "*";
    case ArithOp::Divide: return "/";
  }
  return "?";
}

json term_json(const Term& term) {
  switch (term.kind) {
    case Term::Kind::Integer:
      // Integers are unbounded; keep them as decimal strings.
      return {{"integer", term.value.str()}};
    case Term::Kind::Symbolic:
      return {{"symbol", term.name}};
    case Term::Kind::String:
      return {{"string", term.name}};
    case Term::Kind::Variable:
      return {{"variable", term.name}};
    case Term::Kind::Anonymous:
      return {{"anonymous", true}};
    case Term::Kind::Functional: {
      json args = json::array();
      for (const auto& a : term.args) args.push_back(term_json(a));
      return {{"functor", term.name}, {"args", args}};
    }
    case Term::Kind::Arithmetic: {
      json args = json::array();
      for (const auto& a : term.args) args.push_back(term_json(a));
      return {{"op", op_name(term.op)}, {"args", args}};
    }
  }
  return nullptr;
}

json terms_json(const std::vector<Term>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(term_json(t));
  return out;
}

json atom_json(const ClassicalAtom& atom) {
  return {{"negated", atom.negated}, {"predicate", atom.predicate}, {"args", terms_json(atom.args)}};
}

json guard_json(const std::optional<Guard>& guard) {
  if (!guard) return nullptr;
  return {{"relation", relation_symbol(guard->rel)}, {"term", term_json(guard->term)}};
}

json literals_json(const std::vector<Literal>& literals);

json literal_json(const Literal& literal) {
  json out{{"naf", literal.naf}};
  if (const auto* a = literal.classical()) {
    out["classical"] = atom_json(*a);
  } else if (const auto* b = literal.builtin()) {
    out["builtin"] = {{"left", term_json(b->left)}, {"relation", relation_symbol(b->rel)}, {"right", term_json(b->right)}};
  } else if (const auto* g = literal.aggregate()) {
    json elements = json::array();
    for (const auto& e : g->elements) {
      elements.push_back({{"terms", terms_json(e.terms)}, {"condition", literals_json(e.condition)}});
    }
    out["aggregate"] = {{"function", aggregate_function_name(g->function)},
                        {"elements", elements},
                        {"left", guard_json(g->left)},
                        {"right", guard_json(g->right)}};
  }
  return out;
}

json literals_json(const std::vector<Literal>& literals) {
  json out = json::array();
  for (const auto& l : literals) out.push_back(literal_json(l));
  return out;
}

json origin_json(const Origin& origin) { return {{"line", origin.line}, {"column", origin.column}}; }

json head_json(const Head& head) {
  if (const auto* d = std::get_if<Disjunction>(&head)) {
    json atoms = json::array();
    for (const auto& a : d->atoms) atoms.push_back(atom_json(a));
    return {{"disjunction", atoms}};
  }
  const auto& choice = std::get<ChoiceAtom>(head);
  json elements = json::array();
  for (const auto& e : choice.elements) {
    elements.push_back({{"atom", atom_json(e.atom)}, {"condition", literals_json(e.condition)}});
  }
  return {{"choice", {{"elements", elements}, {"left", guard_json(choice.left)}, {"right", guard_json(choice.right)}}}};
}

}  // namespace

std::string ast_json(const Program& program, int indent) {
  json rules = json::array();
  for (const auto& r : program.rules) {
    rules.push_back({{"head", head_json(r.head)}, {"body", literals_json(r.body)}, {"origin", origin_json(r.origin)}});
  }
  json weaks = json::array();
  for (const auto& w : program.weaks) {
    weaks.push_back({{"body", literals_json(w.body)},
                     {"weight", term_json(w.weight)},
                     {"level", term_json(w.level)},
                     {"terms", terms_json(w.tuple)},
                     {"origin", origin_json(w.origin)}});
  }
  json out{{"rules", rules}, {"weak_constraints", weaks}, {"query", nullptr}};
  if (program.query) {
    out["query"] = {{"atom", atom_json(program.query->atom)}, {"origin", origin_json(program.query->origin)}};
  }
  return out.dump(indent);
}

}  // namespace aspcore
