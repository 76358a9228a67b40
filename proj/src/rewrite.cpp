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

#include "aspcore/rewrite.hpp"

#include <functional>

namespace aspcore {

namespace {

using TermVisitor = std::function<void(Term&)>;

void visit_atom(ClassicalAtom& atom, const TermVisitor& fn) {
  for (auto& t : atom.args) fn(t);
}

void visit_literal(Literal& literal, const TermVisitor& fn) {
  if (auto* a = std::get_if<ClassicalAtom>(&literal.atom)) {
    visit_atom(*a, fn);
  } else if (auto* b = std::get_if<BuiltinAtom>(&literal.atom)) {
    fn(b->left);
    fn(b->right);
  } else if (auto* g = std::get_if<AggregateAtom>(&literal.atom)) {
    if (g->left) fn(g->left->term);
    for (auto& e : g->elements) {
      for (auto& t : e.terms) fn(t);
      for (auto& l : e.condition) visit_literal(l, fn);
    }
    if (g->right) fn(g->right->term);
  }
}

// Visits the top-level terms of a statement in source order.
void visit_rule(Rule& rule, const TermVisitor& fn) {
  if (auto* d = std::get_if<Disjunction>(&rule.head)) {
    for (auto& a : d->atoms) visit_atom(a, fn);
  } else {
    auto& choice = std::get<ChoiceAtom>(rule.head);
    if (choice.left) fn(choice.left->term);
    for (auto& e : choice.elements) {
      visit_atom(e.atom, fn);
      for (auto& l : e.condition) visit_literal(l, fn);
    }
    if (choice.right) fn(choice.right->term);
  }
  for (auto& l : rule.body) visit_literal(l, fn);
}

void visit_weak(WeakConstraint& weak, const TermVisitor& fn) {
  for (auto& l : weak.body) visit_literal(l, fn);
  fn(weak.weight);
  fn(weak.level);
  for (auto& t : weak.tuple) fn(t);
}

void collect_names(const Term& term, std::set<std::string>& variables, std::set<std::string>& symbols) {
  if (term.kind == Term::Kind::Variable) variables.insert(term.name);
  if (term.kind == Term::Kind::Symbolic || term.kind == Term::Kind::Functional) symbols.insert(term.name);
  for (const auto& a : term.args) collect_names(a, variables, symbols);
}

// Calls `fn` on every term node, bottom-up.
void deep_visit(Term& term, const TermVisitor& fn) {
  for (auto& a : term.args) deep_visit(a, fn);
  fn(term);
}

template <typename Statement, typename Visit>
void rename_anonymous(Statement& statement, Visit visit) {
  std::set<std::string> used;
  std::set<std::string> ignored;
  visit(statement, [&](Term& t) { collect_names(t, used, ignored); });
  int counter = 0;
  visit(statement, [&](Term& top) {
    deep_visit(top, [&](Term& t) {
      if (t.kind != Term::Kind::Anonymous) return;
      std::string name;
      do {
        name = "V" + std::to_string(++counter);
      } while (used.contains(name));
      t = Term::variable(name);
    });
  });
}

std::optional<Guard> flipped(const std::optional<Guard>& left) {
  if (!left) return std::nullopt;
  return Guard{inverse(left->rel), left->term};
}

// Each returned body is one alternative the input body stands for.
std::vector<std::vector<Literal>> normalize_body(const std::vector<Literal>& body) {
  std::vector<std::vector<Literal>> bodies{{}};
  for (const auto& literal : body) {
    const auto* g = literal.aggregate();
    if (g == nullptr || !g->left) {
      for (auto& b : bodies) b.push_back(literal);
      continue;
    }
    AggregateAtom lower = *g;
    lower.left.reset();
    lower.right = flipped(g->left);
    if (!g->right) {
      for (auto& b : bodies) b.push_back(Literal{literal.naf, lower});
      continue;
    }
    AggregateAtom upper = *g;
    upper.left.reset();
    if (!literal.naf) {
      for (auto& b : bodies) {
        b.push_back(Literal{false, lower});
        b.push_back(Literal{false, upper});
      }
      continue;
    }
    std::vector<std::vector<Literal>> next;
    for (const auto& b : bodies) {
      next.push_back(b);
      next.back().push_back(Literal{true, lower});
      next.push_back(b);
      next.back().push_back(Literal{true, upper});
    }
    bodies = std::move(next);
  }
  return bodies;
}

void collect_program_names(const Program& program, std::set<std::string>& names) {
  std::set<std::string> ignored;
  Program copy = program;
  const TermVisitor fn = [&](Term& t) { collect_names(t, ignored, names); };
  auto add_atom = [&](const ClassicalAtom& a) { names.insert(a.predicate); };
  auto add_literals = [&](const std::vector<Literal>& body) {
    for (const auto& l : body) {
      if (const auto* a = l.classical()) add_atom(*a);
      if (const auto* g = l.aggregate()) {
        for (const auto& e : g->elements) {
          for (const auto& c : e.condition) {
            if (const auto* a = c.classical()) add_atom(*a);
          }
        }
      }
    }
  };
  for (auto& rule : copy.rules) {
    visit_rule(rule, fn);
    if (const auto* d = rule.disjunction()) {
      for (const auto& a : d->atoms) add_atom(a);
    } else {
      for (const auto& e : rule.choice()->elements) {
        add_atom(e.atom);
        add_literals(e.condition);
      }
    }
    add_literals(rule.body);
  }
  for (auto& weak : copy.weaks) {
    visit_weak(weak, fn);
    add_literals(weak.body);
  }
  if (copy.query) {
    add_atom(copy.query->atom);
    visit_atom(copy.query->atom, fn);
  }
}

}  // namespace

AuxNameGenerator::AuxNameGenerator(const Program& program) { collect_program_names(program, taken_); }

const std::string& AuxNameGenerator::name_for(const std::string& predicate) {
  auto it = assigned_.find(predicate);
  if (it != assigned_.end()) return it->second;
  std::string name;
  do {
    name = std::string(kReservedPrefix) + predicate + "_" + std::to_string(++counter_);
  } while (taken_.contains(name));
  taken_.insert(name);
  return assigned_.emplace(predicate, std::move(name)).first->second;
}

bool is_auxiliary_name(std::string_view name) { return name.starts_with(kReservedPrefix); }

Program name_anonymous_variables(const Program& program) {
  Program out = program;
  for (auto& rule : out.rules) rename_anonymous(rule, visit_rule);
  for (auto& weak : out.weaks) rename_anonymous(weak, visit_weak);
  if (out.query) {
    rename_anonymous(out.query->atom, visit_atom);
  }
  return out;
}

std::vector<Rule> normalize_guards(const Rule& rule) {
  std::vector<Rule> heads;
  if (const auto* choice = rule.choice(); choice != nullptr && choice->left) {
    ChoiceAtom lower = *choice;
    lower.left.reset();
    lower.right = flipped(choice->left);
    heads.push_back(Rule{lower, rule.body, rule.origin});
    if (choice->right) {
      ChoiceAtom upper = *choice;
      upper.left.reset();
      heads.push_back(Rule{upper, rule.body, rule.origin});
    }
  } else {
    heads.push_back(rule);
  }
  std::vector<Rule> out;
  for (const auto& head : heads) {
    for (auto& body : normalize_body(head.body)) out.push_back(Rule{head.head, std::move(body), head.origin});
  }
  return out;
}

std::vector<WeakConstraint> normalize_guards(const WeakConstraint& weak) {
  std::vector<WeakConstraint> out;
  for (auto& body : normalize_body(weak.body)) {
    WeakConstraint copy = weak;
    copy.body = std::move(body);
    out.push_back(std::move(copy));
  }
  return out;
}

Program normalize_guards(const Program& program) {
  Program out;
  out.query = program.query;
  for (const auto& rule : program.rules) {
    for (auto& r : normalize_guards(rule)) out.rules.push_back(std::move(r));
  }
  for (const auto& weak : program.weaks) {
    for (auto& w : normalize_guards(weak)) out.weaks.push_back(std::move(w));
  }
  return out;
}

Program desugar_choice_rules(const Program& program) {
  AuxNameGenerator names(program);
  Program out;
  out.weaks = program.weaks;
  out.query = program.query;
  auto emit = [&out](Rule rule) {
    for (const auto& existing : out.rules) {
      if (existing == rule) return;
    }
    out.rules.push_back(std::move(rule));
  };
  for (const auto& rule : program.rules) {
    const auto* choice = rule.choice();
    if (choice == nullptr) {
      out.rules.push_back(rule);
      continue;
    }
    AggregateAtom count;
    count.function = AggregateFunction::Count;
    count.right = choice->right ? *choice->right : Guard{Relation::GreaterOrEqual, Term::integer(0)};
    for (const auto& element : choice->elements) {
      std::vector<Term> hat_args{Term::integer(element.atom.negated ? 0 : 1)};
      hat_args.insert(hat_args.end(), element.atom.args.begin(), element.atom.args.end());
      const std::string& aux = names.name_for(element.atom.predicate);

      Rule generator{Disjunction{{element.atom, ClassicalAtom{false, aux, hat_args}}}, rule.body, rule.origin};
      generator.body.insert(generator.body.end(), element.condition.begin(), element.condition.end());
      emit(std::move(generator));

      AggregateElement counted;
      counted.terms.push_back(Term::functional(aux, hat_args));
      counted.condition.push_back(Literal{false, element.atom});
      counted.condition.insert(counted.condition.end(), element.condition.begin(), element.condition.end());
      count.elements.push_back(std::move(counted));
    }
    Rule constraint{Disjunction{}, rule.body, rule.origin};
    constraint.body.push_back(Literal{true, std::move(count)});
    emit(std::move(constraint));
  }
  return out;
}

Program desugar(const Program& program) {
  return desugar_choice_rules(normalize_guards(name_anonymous_variables(program)));
}

}  // namespace aspcore
