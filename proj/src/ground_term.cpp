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

#include "aspcore/ground.hpp"
#include "aspcore/rewrite.hpp"
#include "ground_internal.hpp"

namespace aspcore {

GroundTerm GroundTerm::integer(Integer value) {
  GroundTerm t;
  t.kind = Kind::Integer;
  t.value = std::move(value);
  return t;
}

GroundTerm GroundTerm::symbolic(std::string name) {
  GroundTerm t;
  t.kind = Kind::Symbolic;
  t.name = std::move(name);
  return t;
}

GroundTerm GroundTerm::string(std::string content) {
  GroundTerm t;
  t.kind = Kind::String;
  t.name = std::move(content);
  return t;
}

GroundTerm GroundTerm::functional(std::string functor, std::vector<GroundTerm> args) {
  if (args.empty()) return symbolic(std::move(functor));
  GroundTerm t;
  t.kind = Kind::Functional;
  t.name = std::move(functor);
  t.args = std::move(args);
  return t;
}

std::size_t GroundTerm::depth() const {
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a.depth() + 1);
  return d;
}

std::strong_ordering GroundTerm::operator<=>(const GroundTerm& other) const { return term_compare(*this, other); }

namespace {

int class_rank(GroundTerm::Kind kind) {
  switch (kind) {
    case GroundTerm::Kind::Integer: return 0;
    case GroundTerm::Kind::Symbolic: return 1;
    case GroundTerm::Kind::String: return 2;
    case GroundTerm::Kind::Functional: return 3;
  }
  return 4;
}

std::strong_ordering compare_bytes(const std::string& a, const std::string& b) {
  const int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering term_compare(const GroundTerm& t, const GroundTerm& u) {
  if (t.kind != u.kind) return class_rank(t.kind) <=> class_rank(u.kind);
  switch (t.kind) {
    case GroundTerm::Kind::Integer:
      return t.value < u.value ? std::strong_ordering::less
             : t.value > u.value ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
    case GroundTerm::Kind::Symbolic:
    case GroundTerm::Kind::String:
      return compare_bytes(t.name, u.name);
    case GroundTerm::Kind::Functional:
      if (auto c = t.args.size() <=> u.args.size(); c != 0) return c;
      if (auto c = compare_bytes(t.name, u.name); c != 0) return c;
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (auto c = term_compare(t.args[i], u.args[i]); c != 0) return c;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

bool compare_holds(const GroundTerm& t, Relation rel, const GroundTerm& u) {
  const auto c = term_compare(t, u);
  switch (rel) {
    case Relation::Less: return c < 0;
    case Relation::LessOrEqual: return c <= 0;
    case Relation::Equal: return c == 0;
    case Relation::NotEqual: return c != 0;
    case Relation::Greater: return c > 0;
    case Relation::GreaterOrEqual: return c >= 0;
  }
  return false;
}

std::strong_ordering GroundAtom::operator<=>(const GroundAtom& other) const {
  if (auto c = (args.empty() ? 0 : 1) <=> (other.args.empty() ? 0 : 1); c != 0) return c;
  if (auto c = args.size() <=> other.args.size(); c != 0) return c;
  if (auto c = compare_bytes(predicate, other.predicate); c != 0) return c;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (auto c = term_compare(args[i], other.args[i]); c != 0) return c;
  }
  return negated <=> other.negated;
}

std::string to_string(const GroundTerm& term) { return to_string(to_term(term)); }

Term to_term(const GroundTerm& term) {
  switch (term.kind) {
    case GroundTerm::Kind::Integer: return Term::integer(term.value);
    case GroundTerm::Kind::Symbolic: return Term::symbolic(term.name);
    case GroundTerm::Kind::String: return Term::string(term.name);
    case GroundTerm::Kind::Functional: {
      std::vector<Term> args;
      for (const auto& a : term.args) args.push_back(to_term(a));
      return Term::functional(term.name, std::move(args));
    }
  }
  return Term{};
}

std::optional<GroundTerm> to_ground(const Term& term) {
  switch (term.kind) {
    case Term::Kind::Integer: return GroundTerm::integer(term.value);
    case Term::Kind::Symbolic: return GroundTerm::symbolic(term.name);
    case Term::Kind::String: return GroundTerm::string(term.name);
    case Term::Kind::Functional: {
      std::vector<GroundTerm> args;
      for (const auto& a : term.args) {
        auto g = to_ground(a);
        if (!g) return std::nullopt;
        args.push_back(std::move(*g));
      }
      return GroundTerm::functional(term.name, std::move(args));
    }
    default:
      return std::nullopt;
  }
}

std::optional<GroundTerm> eval_arithmetic(const Term& term, const Substitution& sigma) {
  switch (term.kind) {
    case Term::Kind::Integer: return GroundTerm::integer(term.value);
    case Term::Kind::Symbolic: return GroundTerm::symbolic(term.name);
    case Term::Kind::String: return GroundTerm::string(term.name);
    case Term::Kind::Variable: {
      auto it = sigma.find(term.name);
      if (it == sigma.end()) throw std::invalid_argument("variable " + term.name + " is not substituted");
      return it->second;
    }
    case Term::Kind::Anonymous:
      throw std::invalid_argument("anonymous variable cannot be evaluated");
    case Term::Kind::Functional: {
      std::vector<GroundTerm> args;
      for (const auto& a : term.args) {
        auto g = eval_arithmetic(a, sigma);
        if (!g) return std::nullopt;
        args.push_back(std::move(*g));
      }
      return GroundTerm::functional(term.name, std::move(args));
    }
    case Term::Kind::Arithmetic: {
      std::vector<Integer> operands;
      for (const auto& a : term.args) {
        auto g = eval_arithmetic(a, sigma);
        if (!g || !g->is_integer()) return std::nullopt;
        operands.push_back(std::move(g->value));
      }
      switch (term.op) {
        case ArithOp::Negate: return GroundTerm::integer(-operands[0]);
        case ArithOp::Add: return GroundTerm::integer(operands[0] + operands[1]);
        case ArithOp::Subtract: return GroundTerm::integer(operands[0] - operands[1]);
        case ArithOp::Multiply: return GroundTerm::integer(operands[0] * operands[1]);
        case ArithOp::Divide:
          if (operands[1] == 0) return std::nullopt;
          return GroundTerm::integer(operands[0] / operands[1]);  // truncates toward zero
      }
    }
  }
  return std::nullopt;
}

ClassicalAtom to_classical(const GroundAtom& atom) {
  ClassicalAtom out;
  out.negated = atom.negated;
  out.predicate = atom.predicate;
  for (const auto& a : atom.args) out.args.push_back(to_term(a));
  return out;
}

// ---- universe -------------------------------------------------------------

namespace {

void collect_universe_names(const Term& term, std::set<std::string>& symbols, std::set<std::string>& strings,
                            std::set<std::pair<std::string, std::size_t>>& functors) {
  if (term.kind == Term::Kind::Symbolic) symbols.insert(term.name);
  if (term.kind == Term::Kind::String) strings.insert(term.name);
  if (term.kind == Term::Kind::Functional && !is_auxiliary_name(term.name)) {
    functors.emplace(term.name, term.args.size());
  }
  for (const auto& a : term.args) collect_universe_names(a, symbols, strings, functors);
}

template <typename Fn>
void for_each_literal_term(const Literal& literal, const Fn& fn) {
  if (const auto* a = literal.classical()) {
    for (const auto& t : a->args) fn(t);
  } else if (const auto* b = literal.builtin()) {
    fn(b->left);
    fn(b->right);
  } else if (const auto* g = literal.aggregate()) {
    if (g->left) fn(g->left->term);
    if (g->right) fn(g->right->term);
    for (const auto& e : g->elements) {
      for (const auto& t : e.terms) fn(t);
      for (const auto& c : e.condition) for_each_literal_term(c, fn);
    }
  }
}

}  // namespace

Universe Universe::build(const Program& program, const UniverseBounds& bounds, std::size_t capacity) {
  std::set<std::string> symbols;
  std::set<std::string> strings;
  std::set<std::pair<std::string, std::size_t>> functors;
  auto fn = [&](const Term& t) { collect_universe_names(t, symbols, strings, functors); };
  for (const auto& rule : program.rules) {
    if (const auto* d = rule.disjunction()) {
      for (const auto& a : d->atoms) {
        for (const auto& t : a.args) fn(t);
      }
    } else {
      const auto* c = rule.choice();
      if (c->left) fn(c->left->term);
      if (c->right) fn(c->right->term);
      for (const auto& e : c->elements) {
        for (const auto& t : e.atom.args) fn(t);
        for (const auto& l : e.condition) for_each_literal_term(l, fn);
      }
    }
    for (const auto& l : rule.body) for_each_literal_term(l, fn);
  }
  for (const auto& weak : program.weaks) {
    for (const auto& l : weak.body) for_each_literal_term(l, fn);
    fn(weak.weight);
    fn(weak.level);
    for (const auto& t : weak.tuple) fn(t);
  }
  if (program.query) {
    for (const auto& t : program.query->atom.args) fn(t);
  }

  Universe u;
  u.bounds_ = bounds;
  auto check_capacity = [&](std::size_t extra) {
    if (u.terms_.size() + extra > capacity) {
      throw CapacityExceeded("bounded universe exceeds " + std::to_string(capacity) + " terms");
    }
  };
  if (bounds.max_int + bounds.max_int + 1 > Integer(capacity)) {
    throw CapacityExceeded("bounded universe exceeds " + std::to_string(capacity) + " terms");
  }
  for (Integer i = -bounds.max_int; i <= bounds.max_int; ++i) u.terms_.push_back(GroundTerm::integer(i));
  check_capacity(symbols.size() + strings.size());
  for (const auto& s : symbols) u.terms_.push_back(GroundTerm::symbolic(s));
  for (const auto& s : strings) u.terms_.push_back(GroundTerm::string(s));

  // Terms of depth d need at least one argument of depth d-1.
  std::size_t previous_begin = 0;
  for (std::size_t depth = 1; depth <= bounds.max_nesting && !functors.empty(); ++depth) {
    const std::size_t previous_end = u.terms_.size();
    const std::size_t pool = previous_end;
    std::vector<GroundTerm> fresh;
    for (const auto& [name, arity] : functors) {
      std::vector<std::size_t> index(arity, 0);
      while (true) {
        const bool deep_enough = std::any_of(index.begin(), index.end(),
                                             [&](std::size_t i) { return i >= previous_begin; });
        if (deep_enough) {
          check_capacity(fresh.size() + 1);
          std::vector<GroundTerm> args;
          for (auto i : index) args.push_back(u.terms_[i]);
          fresh.push_back(GroundTerm::functional(name, std::move(args)));
        }
        std::size_t pos = 0;
        while (pos < arity && ++index[pos] == pool) index[pos++] = 0;
        if (pos == arity) break;
      }
    }
    if (fresh.empty()) break;
    previous_begin = previous_end;
    for (auto& t : fresh) u.terms_.push_back(std::move(t));
  }
  std::sort(u.terms_.begin(), u.terms_.end());
  return u;
}

bool Universe::within(const GroundTerm& term) const {
  if (term.is_integer()) return term.value <= bounds_.max_int && term.value >= -bounds_.max_int;
  if (term.depth() > bounds_.max_nesting) return false;
  return std::all_of(term.args.begin(), term.args.end(), [this](const GroundTerm& a) { return within(a); });
}

// ---- well-formedness ------------------------------------------------------

namespace {

bool evaluates(const Term& term, const Substitution& sigma) { return eval_arithmetic(term, sigma).has_value(); }

bool literal_outside_elements_evaluates(const Literal& literal, const Substitution& sigma) {
  if (const auto* a = literal.classical()) {
    return std::all_of(a->args.begin(), a->args.end(), [&](const Term& t) { return evaluates(t, sigma); });
  }
  if (const auto* b = literal.builtin()) return evaluates(b->left, sigma) && evaluates(b->right, sigma);
  const auto* g = literal.aggregate();
  return (!g->left || evaluates(g->left->term, sigma)) && (!g->right || evaluates(g->right->term, sigma));
}

}  // namespace

bool is_well_formed(const Rule& rule, const Substitution& sigma) {
  if (const auto* d = rule.disjunction()) {
    for (const auto& a : d->atoms) {
      for (const auto& t : a.args) {
        if (!evaluates(t, sigma)) return false;
      }
    }
  } else {
    const auto* c = rule.choice();
    if (c->left && !evaluates(c->left->term, sigma)) return false;
    if (c->right && !evaluates(c->right->term, sigma)) return false;
    for (const auto& e : c->elements) {
      for (const auto& t : e.atom.args) {
        if (!evaluates(t, sigma)) return false;
      }
      for (const auto& l : e.condition) {
        if (!literal_outside_elements_evaluates(l, sigma)) return false;
      }
    }
  }
  return std::all_of(rule.body.begin(), rule.body.end(),
                     [&](const Literal& l) { return literal_outside_elements_evaluates(l, sigma); });
}

bool is_well_formed(const WeakConstraint& weak, const Substitution& sigma) {
  if (!evaluates(weak.weight, sigma) || !evaluates(weak.level, sigma)) return false;
  for (const auto& t : weak.tuple) {
    if (!evaluates(t, sigma)) return false;
  }
  return std::all_of(weak.body.begin(), weak.body.end(),
                     [&](const Literal& l) { return literal_outside_elements_evaluates(l, sigma); });
}

bool is_well_formed(const AggregateElement& element, const Substitution& sigma) {
  for (const auto& t : element.terms) {
    if (!evaluates(t, sigma)) return false;
  }
  return std::all_of(element.condition.begin(), element.condition.end(),
                     [&](const Literal& l) { return literal_outside_elements_evaluates(l, sigma); });
}

std::optional<GroundAggregateElement> ground_element(const AggregateElement& element, const Substitution& sigma) {
  GroundAggregateElement out;
  for (const auto& t : element.terms) {
    auto g = eval_arithmetic(t, sigma);
    if (!g) return std::nullopt;
    out.terms.push_back(std::move(*g));
  }
  for (const auto& l : element.condition) {
    GroundConditionLiteral gl;
    gl.naf = l.naf;
    if (const auto* a = l.classical()) {
      GroundAtom atom{a->negated, a->predicate, {}};
      for (const auto& t : a->args) {
        auto g = eval_arithmetic(t, sigma);
        if (!g) return std::nullopt;
        atom.args.push_back(std::move(*g));
      }
      gl.atom = std::move(atom);
    } else if (const auto* b = l.builtin()) {
      auto left = eval_arithmetic(b->left, sigma);
      auto right = eval_arithmetic(b->right, sigma);
      if (!left || !right) return std::nullopt;
      gl.atom = GroundBuiltin{std::move(*left), b->rel, std::move(*right)};
    } else {
      throw std::invalid_argument("aggregate inside an aggregate element");
    }
    out.condition.push_back(std::move(gl));
  }
  return out;
}

void canonicalize(std::vector<GroundAggregateElement>& elements) {
  std::vector<std::pair<std::string, GroundAggregateElement>> keyed;
  for (auto& e : elements) keyed.emplace_back(to_string(e), std::move(e));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  elements.clear();
  for (auto& [key, e] : keyed) elements.push_back(std::move(e));
}

std::vector<GroundAggregateElement> instantiate_element(const AggregateElement& element, const Universe& universe,
                                                        const Substitution& context) {
  std::set<std::string> vars;
  collect_variables(element, vars);
  std::vector<std::string> free;
  for (const auto& v : vars) {
    if (!context.contains(v)) free.push_back(v);
  }
  std::vector<GroundAggregateElement> out;
  Substitution sigma = context;
  const auto& terms = universe.terms();
  if (!free.empty() && terms.empty()) return out;
  std::vector<std::size_t> index(free.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < free.size(); ++i) sigma.insert_or_assign(free[i], terms[index[i]]);
    if (auto g = ground_element(element, sigma)) out.push_back(std::move(*g));
    std::size_t pos = 0;
    while (pos < free.size() && ++index[pos] == terms.size()) index[pos++] = 0;
    if (pos == free.size()) break;
  }
  canonicalize(out);
  return out;
}

}  // namespace aspcore
