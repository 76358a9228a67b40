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

#include "aspcore/syntax.hpp"

namespace aspcore {

namespace {

// Binding strength; higher binds tighter.
int precedence(const Term& term) {
  if (term.kind != Term::Kind::Arithmetic) return 4;
  switch (term.op) {
    case ArithOp::Negate: return 3;
    case ArithOp::Multiply:
    case ArithOp::Divide: return 2;
    case ArithOp::Add:
    case ArithOp::Subtract: return 1;
  }
  return 4;
}

char op_symbol(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return '+';
    case ArithOp::Subtract:
    case ArithOp::Negate: return '-';
    case ArithOp::Multiply: return '*';
    case ArithOp::Divide: return '/';
  }
  return '?';
}

void print_term(std::string& out, const Term& term);

void print_operand(std::string& out, const Term& term, bool parenthesize) {
  if (parenthesize) out += '(';
  print_term(out, term);
  if (parenthesize) out += ')';
}

void print_terms(std::string& out, const std::vector<Term>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ',';
    print_term(out, terms[i]);
  }
}

void print_term(std::string& out, const Term& term) {
  switch (term.kind) {
    case Term::Kind::Integer:
      out += term.value.str();
      return;
    case Term::Kind::Symbolic:
    case Term::Kind::Variable:
      out += term.name;
      return;
    case Term::Kind::String:
      out += '"';
      out += term.name;
      out += '"';
      return;
    case Term::Kind::Anonymous:
      out += '_';
      return;
    case Term::Kind::Functional:
      out += term.name;
      out += '(';
      print_terms(out, term.args);
      out += ')';
      return;
    case Term::Kind::Arithmetic: {
      const int prec = precedence(term);
      if (term.op == ArithOp::Negate) {
        out += '-';
        print_operand(out, term.args[0], precedence(term.args[0]) < prec);
        return;
      }
      print_operand(out, term.args[0], precedence(term.args[0]) < prec);
      out += op_symbol(term.op);
      print_operand(out, term.args[1], precedence(term.args[1]) <= prec);
      return;
    }
  }
}

void print_atom(std::string& out, const ClassicalAtom& atom) {
  if (atom.negated) out += '-';
  out += atom.predicate;
  if (!atom.args.empty()) {
    out += '(';
    print_terms(out, atom.args);
    out += ')';
  }
}

void print_literal(std::string& out, const Literal& literal);

void print_literals(std::string& out, const std::vector<Literal>& literals) {
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i > 0) out += ", ";
    print_literal(out, literals[i]);
  }
}

void print_element(std::string& out, const AggregateElement& element) {
  print_terms(out, element.terms);
  if (!element.condition.empty()) {
    out += element.terms.empty() ? ": " : " : ";
    print_literals(out, element.condition);
  } else if (element.terms.empty()) {
    // `{}` reads back as zero elements, so an empty element needs a marker.
    out += ':';
  }
}

void print_left_guard(std::string& out, const std::optional<Guard>& guard) {
  if (!guard) return;
  print_term(out, guard->term);
  out += ' ';
  out += relation_symbol(guard->rel);
  out += ' ';
}

void print_right_guard(std::string& out, const std::optional<Guard>& guard) {
  if (!guard) return;
  out += ' ';
  out += relation_symbol(guard->rel);
  out += ' ';
  print_term(out, guard->term);
}

void print_literal(std::string& out, const Literal& literal) {
  if (literal.naf) out += "not ";
  if (const auto* a = literal.classical()) {
    print_atom(out, *a);
  } else if (const auto* b = literal.builtin()) {
    print_term(out, b->left);
    out += ' ';
    out += relation_symbol(b->rel);
    out += ' ';
    print_term(out, b->right);
  } else if (const auto* g = literal.aggregate()) {
    print_left_guard(out, g->left);
    out += aggregate_function_name(g->function);
    out += '{';
    for (std::size_t i = 0; i < g->elements.size(); ++i) {
      if (i > 0) out += "; ";
      print_element(out, g->elements[i]);
    }
    out += '}';
    print_right_guard(out, g->right);
  }
}

void print_head(std::string& out, const Head& head) {
  if (const auto* d = std::get_if<Disjunction>(&head)) {
    for (std::size_t i = 0; i < d->atoms.size(); ++i) {
      if (i > 0) out += " | ";
      print_atom(out, d->atoms[i]);
    }
    return;
  }
  const auto& choice = std::get<ChoiceAtom>(head);
  print_left_guard(out, choice.left);
  out += '{';
  for (std::size_t i = 0; i < choice.elements.size(); ++i) {
    if (i > 0) out += "; ";
    print_atom(out, choice.elements[i].atom);
    if (!choice.elements[i].condition.empty()) {
      out += " : ";
      print_literals(out, choice.elements[i].condition);
    }
  }
  out += '}';
  print_right_guard(out, choice.right);
}

}  // namespace

std::string to_string(const Term& term) {
  std::string out;
  print_term(out, term);
  return out;
}

std::string to_string(const ClassicalAtom& atom) {
  std::string out;
  print_atom(out, atom);
  return out;
}

std::string to_string(const Literal& literal) {
  std::string out;
  print_literal(out, literal);
  return out;
}

std::string to_string(const AggregateElement& element) {
  std::string out;
  print_element(out, element);
  return out;
}

std::string to_string(const Rule& rule) {
  std::string out;
  if (rule.is_constraint()) {
    out += ":-";
    if (!rule.body.empty()) {
      out += ' ';
      print_literals(out, rule.body);
    } else {
      out += ' ';
    }
    out += '.';
    return out;
  }
  print_head(out, rule.head);
  if (!rule.body.empty()) {
    out += " :- ";
    print_literals(out, rule.body);
  }
  out += '.';
  return out;
}

std::string to_string(const WeakConstraint& weak) {
  std::string out = ":~ ";
  print_literals(out, weak.body);
  out += ". [";
  print_term(out, weak.weight);
  out += '@';
  print_term(out, weak.level);
  for (const auto& t : weak.tuple) {
    out += ',';
    print_term(out, t);
  }
  out += ']';
  return out;
}

std::string to_string(const Query& query) {
  std::string out;
  print_atom(out, query.atom);
  out += '?';
  return out;
}

std::string pretty_print(const Program& program) {
  std::string out;
  for (const auto& rule : program.rules) {
    out += to_string(rule);
    out += '\n';
  }
  for (const auto& weak : program.weaks) {
    out += to_string(weak);
    out += '\n';
  }
  if (program.query) {
    out += to_string(*program.query);
    out += '\n';
  }
  return out;
}

}  // namespace aspcore
