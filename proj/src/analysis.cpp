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

#include "aspcore/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace aspcore {

namespace {

// Variables occurring in `term` outside of arithmetic subterms.
void plain_variables(const Term& term, std::set<std::string>& out) {
  if (term.kind == Term::Kind::Variable) {
    out.insert(term.name);
  } else if (term.kind == Term::Kind::Functional) {
    for (const auto& a : term.args) plain_variables(a, out);
  }
}

bool all_in(const std::set<std::string>& needed, const std::set<std::string>& have) {
  return std::includes(have.begin(), have.end(), needed.begin(), needed.end());
}

std::set<std::string> variables_of(const Term& term) {
  std::set<std::string> out;
  collect_variables(term, out);
  return out;
}

// What literal `i` binds, given the variables bound by the others.
std::set<std::string> binds(const Literal& literal, const std::set<std::string>& global_scope,
                            const std::set<std::string>& bound) {
  std::set<std::string> out;
  if (literal.naf) return out;
  if (const auto* a = literal.classical()) {
    for (const auto& t : a->args) plain_variables(t, out);
  } else if (const auto* b = literal.builtin()) {
    if (b->rel != Relation::Equal) return out;
    if (all_in(variables_of(b->left), bound)) plain_variables(b->right, out);
    if (all_in(variables_of(b->right), bound)) plain_variables(b->left, out);
  } else if (const auto* g = literal.aggregate()) {
    if (!g->right || g->left || g->right->rel != Relation::Equal) return out;
    std::set<std::string> element_globals;
    for (const auto& e : g->elements) {
      std::set<std::string> vars;
      collect_variables(e, vars);
      for (const auto& v : vars) {
        if (global_scope.contains(v)) element_globals.insert(v);
      }
    }
    if (all_in(element_globals, bound)) plain_variables(g->right->term, out);
  }
  return out;
}

void collect_outside_elements(const Literal& literal, std::set<std::string>& out) {
  if (const auto* g = literal.aggregate()) {
    if (g->left) collect_variables(g->left->term, out);
    if (g->right) collect_variables(g->right->term, out);
    return;
  }
  collect_variables(literal, out);
}

// The rule-level fixpoint and element-level checks shared by all statements.
SafetyReport check(const std::vector<Literal>& body, const std::set<std::string>& globals) {
  SafetyReport report;
  const auto bound = bound_variables(body);

  auto explain = [&](const std::string& v, const std::vector<Literal>& literals) -> std::string {
    bool anywhere = false;
    std::string arithmetic_site;
    std::string equality_site;
    std::string negative_site;
    for (const auto& l : literals) {
      std::set<std::string> vars;
      collect_outside_elements(l, vars);
      if (!vars.contains(v)) continue;
      anywhere = true;
      std::set<std::string> plain;
      if (const auto* a = l.classical()) {
        for (const auto& t : a->args) plain_variables(t, plain);
      } else if (const auto* b = l.builtin()) {
        plain_variables(b->left, plain);
        plain_variables(b->right, plain);
      } else if (const auto* g = l.aggregate()) {
        if (g->right) plain_variables(g->right->term, plain);
        if (g->left) plain_variables(g->left->term, plain);
      }
      if (l.naf) {
        if (negative_site.empty()) negative_site = to_string(l);
      } else if (!plain.contains(v)) {
        if (arithmetic_site.empty()) arithmetic_site = to_string(l);
      } else if ((l.builtin() || l.aggregate()) && equality_site.empty()) {
        equality_site = to_string(l);
      }
    }
    if (!anywhere) return "it does not occur in any body literal";
    if (!equality_site.empty()) {
      return "the only candidate binder (" + equality_site +
             ") is not an equality whose other side is bound, or an aggregate with an `=` guard whose "
             "element variables are bound";
    }
    if (!arithmetic_site.empty()) {
      return "it occurs only inside arithmetic terms (in " + arithmetic_site +
             "), and an equality binds a variable only when it stands outside arithmetic on one side";
    }
    if (!negative_site.empty()) return "it occurs only in negated literals (such as " + negative_site + ")";
    return "it is not bound";
  };

  for (const auto& v : globals) {
    if (!bound.contains(v)) {
      report.unbound.push_back({v, UnboundVariable::Scope::Global, explain(v, body)});
    }
  }
  for (const auto& l : body) {
    const auto* g = l.aggregate();
    if (g == nullptr) continue;
    for (const auto& e : g->elements) {
      std::set<std::string> vars;
      collect_variables(e, vars);
      const auto local_bound = bound_variables(e.condition, globals);
      for (const auto& v : vars) {
        if (globals.contains(v) || local_bound.contains(v)) continue;
        const bool seen = std::any_of(report.unbound.begin(), report.unbound.end(),
                                      [&](const UnboundVariable& u) { return u.name == v; });
        if (seen) continue;
        report.unbound.push_back({v, UnboundVariable::Scope::Local,
                                  explain(v, e.condition) + " (aggregate element " + to_string(e) + ")"});
      }
    }
  }
  report.safe = report.unbound.empty();
  return report;
}

void collect_literal_atoms(const Literal& literal, const std::function<void(const ClassicalAtom&, bool)>& fn,
                           bool in_element = false) {
  if (const auto* a = literal.classical()) {
    fn(*a, in_element);
  } else if (const auto* g = literal.aggregate()) {
    for (const auto& e : g->elements) {
      for (const auto& c : e.condition) collect_literal_atoms(c, fn, true);
    }
  }
}

// Every classical atom of the program: heads, bodies, element conditions,
// weak constraints and the query.
void for_each_atom(const Program& program, const std::function<void(const ClassicalAtom&, const Origin&)>& fn) {
  for (const auto& rule : program.rules) {
    auto visit = [&](const ClassicalAtom& a, bool) { fn(a, rule.origin); };
    if (const auto* d = rule.disjunction()) {
      for (const auto& a : d->atoms) fn(a, rule.origin);
    } else {
      for (const auto& e : rule.choice()->elements) {
        fn(e.atom, rule.origin);
        for (const auto& c : e.condition) collect_literal_atoms(c, visit);
      }
    }
    for (const auto& l : rule.body) collect_literal_atoms(l, visit);
  }
  for (const auto& weak : program.weaks) {
    for (const auto& l : weak.body) collect_literal_atoms(l, [&](const ClassicalAtom& a, bool) { fn(a, weak.origin); });
  }
  if (program.query) fn(program.query->atom, program.query->origin);
}

void for_each_term(const Program& program, const std::function<void(const Term&, const Origin&)>& fn) {
  std::function<void(const Literal&, const Origin&)> literal = [&](const Literal& l, const Origin& o) {
    if (const auto* a = l.classical()) {
      for (const auto& t : a->args) fn(t, o);
    } else if (const auto* b = l.builtin()) {
      fn(b->left, o);
      fn(b->right, o);
    } else if (const auto* g = l.aggregate()) {
      if (g->left) fn(g->left->term, o);
      if (g->right) fn(g->right->term, o);
      for (const auto& e : g->elements) {
        for (const auto& t : e.terms) fn(t, o);
        for (const auto& c : e.condition) literal(c, o);
      }
    }
  };
  for (const auto& rule : program.rules) {
    if (const auto* d = rule.disjunction()) {
      for (const auto& a : d->atoms) {
        for (const auto& t : a.args) fn(t, rule.origin);
      }
    } else {
      const auto* c = rule.choice();
      if (c->left) fn(c->left->term, rule.origin);
      if (c->right) fn(c->right->term, rule.origin);
      for (const auto& e : c->elements) {
        for (const auto& t : e.atom.args) fn(t, rule.origin);
        for (const auto& l : e.condition) literal(l, rule.origin);
      }
    }
    for (const auto& l : rule.body) literal(l, rule.origin);
  }
  for (const auto& weak : program.weaks) {
    for (const auto& l : weak.body) literal(l, weak.origin);
    fn(weak.weight, weak.origin);
    fn(weak.level, weak.origin);
    for (const auto& t : weak.tuple) fn(t, weak.origin);
  }
  if (program.query) {
    for (const auto& t : program.query->atom.args) fn(t, program.query->origin);
  }
}

bool is_nonzero_constant(const Term& term) {
  if (term.kind == Term::Kind::Integer) return term.value != 0;
  if (term.kind == Term::Kind::Arithmetic && term.op == ArithOp::Negate) return is_nonzero_constant(term.args[0]);
  return false;
}

void find_divisions(const Term& term, std::vector<const Term*>& out) {
  for (const auto& a : term.args) find_divisions(a, out);
  if (term.kind == Term::Kind::Arithmetic && term.op == ArithOp::Divide && !is_nonzero_constant(term.args[1])) {
    out.push_back(&term);
  }
}

// Builtin comparisons of a statement that might rule out a zero divisor.
std::vector<std::string> divisor_guards(const std::vector<Literal>& body, const Term& divisor) {
  std::vector<std::string> out;
  const auto vars = variables_of(divisor);
  for (const auto& l : body) {
    const auto* b = l.builtin();
    if (b == nullptr || b->rel == Relation::Equal) continue;
    std::set<std::string> used;
    collect_variables(b->left, used);
    collect_variables(b->right, used);
    if (std::any_of(vars.begin(), vars.end(), [&](const std::string& v) { return used.contains(v); })) {
      out.push_back(to_string(l));
    }
  }
  return out;
}

}  // namespace

std::set<std::string> bound_variables(const std::vector<Literal>& literals,
                                      const std::set<std::string>& initially_bound) {
  std::set<std::string> scope;
  for (const auto& l : literals) collect_outside_elements(l, scope);
  scope.insert(initially_bound.begin(), initially_bound.end());

  std::set<std::string> bound = initially_bound;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& l : literals) {
      for (const auto& v : binds(l, scope, bound)) {
        changed |= bound.insert(v).second;
      }
    }
  }
  return bound;
}

std::set<std::string> global_variables(const Rule& rule) {
  std::set<std::string> out;
  if (const auto* d = rule.disjunction()) {
    for (const auto& a : d->atoms) collect_variables(a, out);
  } else {
    const auto* c = rule.choice();
    if (c->left) collect_variables(c->left->term, out);
    if (c->right) collect_variables(c->right->term, out);
    for (const auto& e : c->elements) {
      collect_variables(e.atom, out);
      for (const auto& l : e.condition) collect_variables(l, out);
    }
  }
  for (const auto& l : rule.body) collect_outside_elements(l, out);
  return out;
}

std::set<std::string> global_variables(const WeakConstraint& weak) {
  std::set<std::string> out;
  for (const auto& l : weak.body) collect_outside_elements(l, out);
  collect_variables(weak.weight, out);
  collect_variables(weak.level, out);
  for (const auto& t : weak.tuple) collect_variables(t, out);
  return out;
}

SafetyReport check_safety(const Rule& rule) { return check(rule.body, global_variables(rule)); }

SafetyReport check_safety(const WeakConstraint& weak) { return check(weak.body, global_variables(weak)); }

SafetyReport check_safety(const Query& query) {
  std::set<std::string> globals;
  collect_variables(query.atom, globals);
  return check({Literal{false, query.atom}}, globals);
}

std::string Signature::str() const {
  return (negated ? "-" : "") + name + "/" + std::to_string(arity);
}

void DependencyGraph::add_edge(const Signature& from, const Signature& to) {
  vertices_.insert(from);
  vertices_.insert(to);
  edges_.emplace(from, to);
  successors_[from].insert(to);
}

std::vector<Signature> DependencyGraph::path(const Signature& from, const Signature& to) const {
  // Breadth-first search over paths with at least one edge.
  std::map<Signature, Signature> parent;
  std::deque<Signature> queue;
  auto expand = [&](const Signature& v) -> bool {
    auto it = successors_.find(v);
    if (it == successors_.end()) return false;
    for (const auto& w : it->second) {
      if (parent.contains(w)) continue;
      parent.emplace(w, v);
      if (w == to) return true;
      queue.push_back(w);
    }
    return false;
  };
  bool found = expand(from);
  while (!found && !queue.empty()) {
    const Signature v = queue.front();
    queue.pop_front();
    found = expand(v);
  }
  if (!found) return {};
  std::vector<Signature> out{to};
  Signature v = parent.at(to);
  while (!(v == from)) {
    out.push_back(v);
    v = parent.at(v);
  }
  out.push_back(from);
  std::reverse(out.begin(), out.end());
  return out;
}

bool DependencyGraph::reaches(const Signature& from, const Signature& to) const { return !path(from, to).empty(); }

DependencyGraph build_dependency_graph(const Program& program) {
  DependencyGraph graph;
  for_each_atom(program, [&](const ClassicalAtom& a, const Origin&) { graph.add_vertex(Signature::of(a)); });
  for (const auto& rule : program.rules) {
    std::vector<Signature> heads;
    if (const auto* d = rule.disjunction()) {
      for (const auto& a : d->atoms) heads.push_back(Signature::of(a));
    } else {
      for (const auto& e : rule.choice()->elements) heads.push_back(Signature::of(e.atom));
    }
    for (const auto& h : heads) {
      for (const auto& other : heads) graph.add_edge(h, other);
      for (const auto& l : rule.body) {
        collect_literal_atoms(l, [&](const ClassicalAtom& a, bool) { graph.add_edge(h, Signature::of(a)); });
      }
    }
  }
  return graph;
}

std::string dump_graph(const DependencyGraph& graph) {
  std::vector<std::string> lines;
  for (const auto& [from, to] : graph.edges()) lines.push_back("edge " + from.str() + " " + to.str());
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

std::vector<RecursionViolation> check_aggregates_nonrecursive(const Program& program, const DependencyGraph& graph) {
  std::vector<RecursionViolation> out;
  for (const auto& rule : program.rules) {
    const auto* d = rule.disjunction();
    if (d == nullptr) continue;
    std::set<Signature> inner;
    for (const auto& l : rule.body) {
      collect_literal_atoms(l, [&](const ClassicalAtom& a, bool in_element) {
        if (in_element) inner.insert(Signature::of(a));
      });
    }
    for (const auto& a : inner) {
      for (const auto& h : d->atoms) {
        auto path = graph.path(a, Signature::of(h));
        if (!path.empty()) out.push_back({a, Signature::of(h), std::move(path), rule.origin});
      }
    }
  }
  return out;
}

std::vector<Warning> check_arities(const Program& program) {
  std::map<std::string, std::set<std::size_t>> arities;
  std::map<std::string, Origin> conflict_origin;
  for_each_atom(program, [&](const ClassicalAtom& a, const Origin& origin) {
    auto& seen = arities[a.predicate];
    if (!seen.empty() && !seen.contains(a.arity()) && !conflict_origin.contains(a.predicate)) {
      conflict_origin.emplace(a.predicate, origin);
    }
    seen.insert(a.arity());
  });
  std::vector<Warning> out;
  for (const auto& [name, origin] : conflict_origin) {
    std::string list;
    for (auto n : arities.at(name)) list += (list.empty() ? "" : ", ") + std::to_string(n);
    out.push_back({origin, "predicate name '" + name + "' is used with different arities (" + list + ")"});
  }
  std::sort(out.begin(), out.end(), [](const Warning& a, const Warning& b) {
    return std::tie(a.origin.line, a.origin.column, a.message) < std::tie(b.origin.line, b.origin.column, b.message);
  });
  return out;
}

std::vector<Warning> lint_undefined_arithmetic(const Program& program) {
  std::vector<Warning> out;
  auto report = [&](const std::vector<Literal>& body, const Origin& origin, const Term& top) {
    std::vector<const Term*> divisions;
    find_divisions(top, divisions);
    for (const Term* division : divisions) {
      std::string message = "division " + to_string(*division) +
                            " may be undefined: its divisor is not a non-zero integer constant";
      const auto guards = divisor_guards(body, division->args[1]);
      if (!guards.empty()) {
        message += " (the comparison " + guards.front() + " in the same statement may rule out a zero divisor)";
      }
      out.push_back({origin, message});
    }
  };
  const std::vector<Literal> no_body;
  for (const auto& rule : program.rules) {
    Program single;
    single.rules.push_back(rule);
    for_each_term(single, [&](const Term& t, const Origin& o) { report(rule.body, o, t); });
  }
  for (const auto& weak : program.weaks) {
    Program single;
    single.weaks.push_back(weak);
    for_each_term(single, [&](const Term& t, const Origin& o) { report(weak.body, o, t); });
  }
  if (program.query) {
    for (const auto& t : program.query->atom.args) report(no_body, program.query->origin, t);
  }
  return out;
}

}  // namespace aspcore
