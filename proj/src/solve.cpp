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

#include "aspcore/solve.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "aspcore/rewrite.hpp"

namespace aspcore {

// ---- interpretations ------------------------------------------------------

namespace {

GroundAtom complement(const GroundAtom& atom) {
  GroundAtom out = atom;
  out.negated = !out.negated;
  return out;
}

}  // namespace

Interpretation::Interpretation(std::initializer_list<GroundAtom> atoms) {
  for (const auto& a : atoms) insert(a);
}

void Interpretation::insert(const GroundAtom& atom) {
  if (atoms_.contains(complement(atom))) {
    throw std::invalid_argument("inconsistent interpretation: both " + to_string(atom) + " and its complement");
  }
  atoms_.insert(atom);
}

std::string Interpretation::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& a : atoms_) {
    if (!first) out += ", ";
    first = false;
    out += to_string(a);
  }
  return out + "}";
}

// ---- satisfaction ---------------------------------------------------------

bool compare_holds(const AggregateValue& value, Relation rel, const GroundTerm& bound) {
  if (value.kind == AggregateValue::Kind::Term) return compare_holds(value.term, rel, bound);
  const bool below = value.kind == AggregateValue::Kind::MinusInfinity;
  switch (rel) {
    case Relation::Less:
    case Relation::LessOrEqual: return below;
    case Relation::Greater:
    case Relation::GreaterOrEqual: return !below;
    case Relation::Equal: return false;
    case Relation::NotEqual: return true;
  }
  return false;
}

bool satisfies_builtin(const GroundTerm& left, Relation rel, const GroundTerm& right) {
  return compare_holds(left, rel, right);
}

namespace {

bool condition_holds(const GroundConditionLiteral& literal, const Interpretation& interpretation) {
  bool value;
  if (const auto* a = std::get_if<GroundAtom>(&literal.atom)) {
    value = interpretation.contains(*a);
  } else {
    value = std::get<GroundBuiltin>(literal.atom).holds();
  }
  return literal.naf ? !value : value;
}

AggregateValue apply_function(AggregateFunction fn, const std::set<std::vector<GroundTerm>>& tuples) {
  switch (fn) {
    case AggregateFunction::Count:
      return AggregateValue::of(GroundTerm::integer(tuples.size()));
    case AggregateFunction::Sum: {
      Integer sum = 0;
      for (const auto& t : tuples) {
        if (!t.empty() && t.front().is_integer()) sum += t.front().value;
      }
      return AggregateValue::of(GroundTerm::integer(sum));
    }
    case AggregateFunction::Max:
    case AggregateFunction::Min: {
      const bool is_max = fn == AggregateFunction::Max;
      const GroundTerm* best = nullptr;
      for (const auto& t : tuples) {
        if (t.empty()) continue;
        if (best == nullptr || (is_max ? t.front() > *best : t.front() < *best)) best = &t.front();
      }
      if (best == nullptr) return is_max ? AggregateValue::minus_infinity() : AggregateValue::plus_infinity();
      return AggregateValue::of(*best);
    }
  }
  return AggregateValue::of(GroundTerm::integer(0));
}

}  // namespace

AggregateValue eval_aggregate(AggregateFunction fn, const std::vector<GroundAggregateElement>& elements,
                              const Interpretation& interpretation) {
  std::set<std::vector<GroundTerm>> tuples;
  for (const auto& e : elements) {
    const bool holds = std::all_of(e.condition.begin(), e.condition.end(), [&](const GroundConditionLiteral& l) {
      return condition_holds(l, interpretation);
    });
    if (holds) tuples.insert(e.terms);
  }
  return apply_function(fn, tuples);
}

bool satisfies_literal(const GroundLiteral& literal, const Interpretation& interpretation) {
  bool value;
  if (const auto* a = literal.classical()) {
    value = interpretation.contains(*a);
  } else if (const auto* b = literal.builtin()) {
    value = b->holds();
  } else {
    const auto* g = literal.aggregate();
    value = compare_holds(eval_aggregate(g->function, g->elements, interpretation), g->rel, g->bound);
  }
  return literal.naf ? !value : value;
}

bool satisfies_body(const std::vector<GroundLiteral>& body, const Interpretation& interpretation) {
  return std::all_of(body.begin(), body.end(),
                     [&](const GroundLiteral& l) { return satisfies_literal(l, interpretation); });
}

bool is_model(const GroundProgram& program, const Interpretation& interpretation) {
  for (const auto& rule : program.rules) {
    if (!satisfies_body(rule.body, interpretation)) continue;
    const bool head = std::any_of(rule.head.begin(), rule.head.end(),
                                  [&](const GroundAtom& a) { return interpretation.contains(a); });
    if (!head) return false;
  }
  return true;
}

GroundProgram reduct(const GroundProgram& program, const Interpretation& interpretation) {
  GroundProgram out;
  for (const auto& rule : program.rules) {
    if (satisfies_body(rule.body, interpretation)) out.rules.push_back(rule);
  }
  return out;
}

// ---- enumeration ----------------------------------------------------------

namespace {

// Value of a body literal that does not depend on atoms of `base` (atoms
// outside it are false).
std::optional<bool> fixed_value(const GroundLiteral& literal, const std::set<GroundAtom>& base) {
  bool value;
  if (const auto* a = literal.classical()) {
    if (base.contains(*a)) return std::nullopt;
    value = false;
  } else if (const auto* b = literal.builtin()) {
    value = b->holds();
  } else {
    const auto& g = *literal.aggregate();
    // Elements with a condition that can never hold are dropped; any other
    // element mentioning a base atom leaves the value open.
    std::vector<GroundAggregateElement> live;
    for (const auto& e : g.elements) {
      bool dead = false, open = false;
      for (const auto& c : e.condition) {
        if (const auto* a = std::get_if<GroundAtom>(&c.atom)) {
          if (base.contains(*a)) {
            open = true;
          } else if (!c.naf) {
            dead = true;
          }
        } else if (std::get<GroundBuiltin>(c.atom).holds() == c.naf) {
          dead = true;
        }
      }
      if (dead) continue;
      if (open) return std::nullopt;
      live.push_back({e.terms, {}});
    }
    value = compare_holds(eval_aggregate(g.function, live, Interpretation{}), g.rel, g.bound);
  }
  return literal.naf ? !value : value;
}

// Possibly derivable atoms, shrunk to a fixpoint by folding literals that
// are constant relative to the current base. Every answer set stays inside.
std::set<GroundAtom> candidate_base(const GroundProgram& program) {
  auto base = possibly_derivable(program);
  for (;;) {
    GroundProgram folded;
    for (const auto& rule : program.rules) {
      GroundRule kept{rule.head, {}};
      bool vacuous = false;
      for (const auto& l : rule.body) {
        const auto v = fixed_value(l, base);
        if (!v) {
          kept.body.push_back(l);
        } else if (!*v) {
          vacuous = true;
          break;
        }
      }
      if (!vacuous) folded.rules.push_back(std::move(kept));
    }
    auto next = possibly_derivable(folded);
    if (next == base) return base;
    base = std::move(next);
  }
}

// The ground program over atom indices 0..n-1 of the candidate base. Atoms
// outside the base are constant false.
class Compiled {
 public:
  struct Condition {
    bool naf = false;
    int atom = -1;       // -1: not an atom, or an atom outside the base
    bool constant = false;  // value when atom == -1
  };

  struct Element {
    std::size_t tuple = 0;
    std::vector<Condition> condition;
  };

  struct Aggregate {
    AggregateFunction function = AggregateFunction::Count;
    std::vector<std::vector<GroundTerm>> tuples;
    std::vector<Element> elements;
    Relation rel = Relation::Equal;
    GroundTerm bound;
  };

  struct Literal {
    bool naf = false;
    int atom = -1;
    bool constant = false;
    int aggregate = -1;
  };

  struct Rule {
    std::vector<int> head;
    std::vector<Literal> body;
    std::vector<int> atoms;  // every atom the rule mentions
  };

  explicit Compiled(const GroundProgram& program) {
    const auto derivable = candidate_base(program);
    atoms_.assign(derivable.begin(), derivable.end());
    for (std::size_t i = 0; i < atoms_.size(); ++i) ids_.emplace(atoms_[i], static_cast<int>(i));
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      auto it = ids_.find(complement(atoms_[i]));
      if (it != ids_.end() && it->second > static_cast<int>(i)) complements_.emplace_back(static_cast<int>(i), it->second);
    }
    for (const auto& rule : program.rules) compile(rule, derivable);
  }

  const std::vector<GroundAtom>& atoms() const { return atoms_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<std::pair<int, int>>& complements() const { return complements_; }

  bool holds(const Literal& l, const std::vector<char>& val) const {
    bool value;
    if (l.aggregate >= 0) {
      value = aggregate_holds(aggregates_[l.aggregate], val);
    } else if (l.atom >= 0) {
      value = val[l.atom] != 0;
    } else {
      value = l.constant;
    }
    return l.naf ? !value : value;
  }

  bool body_holds(const Rule& rule, const std::vector<char>& val) const {
    return std::all_of(rule.body.begin(), rule.body.end(), [&](const Literal& l) { return holds(l, val); });
  }

  bool satisfied(const Rule& rule, const std::vector<char>& val) const {
    if (!body_holds(rule, val)) return true;
    return std::any_of(rule.head.begin(), rule.head.end(), [&](int a) { return val[a] != 0; });
  }

  Interpretation to_interpretation(const std::vector<char>& val) const {
    Interpretation out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (val[i]) out.insert(atoms_[i]);
    }
    return out;
  }

 private:
  int id_of(const GroundAtom& atom) const {
    auto it = ids_.find(atom);
    return it == ids_.end() ? -1 : it->second;
  }

  void compile(const GroundRule& rule, const std::set<GroundAtom>& base) {
    Rule out;
    for (const auto& l : rule.body) {
      if (const auto v = fixed_value(l, base)) {
        if (!*v) return;
        continue;
      }
      Literal cl;
      cl.naf = l.naf;
      if (const auto* a = l.classical()) {
        cl.atom = id_of(*a);
      } else if (const auto* b = l.builtin()) {
        cl.constant = b->holds();
      } else {
        cl.aggregate = static_cast<int>(aggregates_.size());
        aggregates_.push_back(compile(*l.aggregate(), out.atoms));
      }
      // A body literal that can never hold makes the rule vacuous.
      if (cl.aggregate < 0 && cl.atom < 0 && (cl.naf ? cl.constant : !cl.constant)) return;
      if (cl.atom >= 0) out.atoms.push_back(cl.atom);
      out.body.push_back(cl);
    }
    for (const auto& h : rule.head) {
      const int id = id_of(h);
      // Heads of non-vacuous rules are derivable; keep the check for safety.
      if (id < 0) throw std::logic_error("head atom outside the candidate base: " + to_string(h));
      out.head.push_back(id);
      out.atoms.push_back(id);
    }
    std::sort(out.atoms.begin(), out.atoms.end());
    out.atoms.erase(std::unique(out.atoms.begin(), out.atoms.end()), out.atoms.end());
    rules_.push_back(std::move(out));
  }

  Aggregate compile(const GroundAggregate& g, std::vector<int>& atoms) {
    Aggregate out;
    out.function = g.function;
    out.rel = g.rel;
    out.bound = g.bound;
    std::map<std::vector<GroundTerm>, std::size_t> tuple_ids;
    for (const auto& e : g.elements) {
      Element ce;
      auto [it, fresh] = tuple_ids.emplace(e.terms, out.tuples.size());
      if (fresh) out.tuples.push_back(e.terms);
      ce.tuple = it->second;
      bool impossible = false;
      for (const auto& c : e.condition) {
        Condition cc;
        cc.naf = c.naf;
        if (const auto* a = std::get_if<GroundAtom>(&c.atom)) {
          cc.atom = id_of(*a);
        } else {
          cc.constant = std::get<GroundBuiltin>(c.atom).holds();
        }
        if (cc.atom < 0) {
          if (cc.naf ? cc.constant : !cc.constant) impossible = true;
          continue;
        }
        atoms.push_back(cc.atom);
        ce.condition.push_back(cc);
      }
      if (!impossible) out.elements.push_back(std::move(ce));
    }
    return out;
  }

  bool aggregate_holds(const Aggregate& g, const std::vector<char>& val) const {
    std::vector<char> present(g.tuples.size(), 0);
    for (const auto& e : g.elements) {
      if (present[e.tuple]) continue;
      const bool holds = std::all_of(e.condition.begin(), e.condition.end(), [&](const Condition& c) {
        const bool v = val[c.atom] != 0;
        return c.naf ? !v : v;
      });
      if (holds) present[e.tuple] = 1;
    }
    std::set<std::vector<GroundTerm>> tuples;
    for (std::size_t i = 0; i < g.tuples.size(); ++i) {
      if (present[i]) tuples.insert(g.tuples[i]);
    }
    return compare_holds(apply_function(g.function, tuples), g.rel, g.bound);
  }

  std::vector<GroundAtom> atoms_;
  std::map<GroundAtom, int> ids_;
  std::vector<std::pair<int, int>> complements_;
  std::vector<Rule> rules_;
  std::vector<Aggregate> aggregates_;
};

// Depth-first assignment of `vars` (in order), checking each rule as soon as
// all of its atoms are assigned. Atoms outside `vars` keep their value in
// `val`. `on_leaf` returns true to stop.
class Search {
 public:
  Search(const Compiled& program, std::vector<const Compiled::Rule*> rules, std::vector<int> vars,
         bool check_consistency)
      : program_(program), vars_(std::move(vars)) {
    std::vector<int> position(program.atoms().size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) position[vars_[i]] = static_cast<int>(i);
    rules_at_.resize(vars_.size() + 1);
    for (const auto* rule : rules) {
      int last = -1;
      for (int a : rule->atoms) last = std::max(last, position[a]);
      rules_at_[last + 1].push_back(rule);
    }
    if (check_consistency) {
      pairs_at_.resize(vars_.size() + 1);
      for (const auto& [a, b] : program.complements()) {
        pairs_at_[std::max(position[a], position[b]) + 1].emplace_back(a, b);
      }
    }
  }

  // Returns true if stopped by `on_leaf`.
  bool run(std::vector<char>& val, const std::function<bool(const std::vector<char>&)>& on_leaf) {
    if (!consistent_at(0, val)) return false;
    return descend(0, val, on_leaf);
  }

 private:
  bool consistent_at(std::size_t level, const std::vector<char>& val) const {
    for (const auto* rule : rules_at_[level]) {
      if (!program_.satisfied(*rule, val)) return false;
    }
    if (!pairs_at_.empty()) {
      for (const auto& [a, b] : pairs_at_[level]) {
        if (val[a] && val[b]) return false;
      }
    }
    return true;
  }

  bool descend(std::size_t depth, std::vector<char>& val, const std::function<bool(const std::vector<char>&)>& on_leaf) {
    if (depth == vars_.size()) return on_leaf(val);
    const int atom = vars_[depth];
    for (char value : {char(0), char(1)}) {
      val[atom] = value;
      if (consistent_at(depth + 1, val) && descend(depth + 1, val, on_leaf)) return true;
    }
    val[atom] = 0;
    return false;
  }

  const Compiled& program_;
  std::vector<int> vars_;
  std::vector<std::vector<const Compiled::Rule*>> rules_at_;
  std::vector<std::vector<std::pair<int, int>>> pairs_at_;
};

std::vector<const Compiled::Rule*> reduct_rules(const Compiled& program, const std::vector<char>& val) {
  std::vector<const Compiled::Rule*> out;
  for (const auto& rule : program.rules()) {
    if (program.body_holds(rule, val)) out.push_back(&rule);
  }
  return out;
}

// Some proper subset J of I is a model of the reduct of the program w.r.t. I.
bool has_smaller_model_search(const Compiled& program, const std::vector<char>& val) {
  const auto rules = reduct_rules(program, val);
  std::vector<int> vars;
  for (std::size_t i = 0; i < val.size(); ++i) {
    if (val[i]) vars.push_back(static_cast<int>(i));
  }
  if (vars.empty()) return false;
  std::vector<char> j(val.size(), 0);
  Search search(program, rules, vars, false);
  return search.run(j, [&](const std::vector<char>& candidate) {
    return std::any_of(vars.begin(), vars.end(), [&](int a) { return candidate[a] == 0; });
  });
}

bool has_smaller_model_brute(const Compiled& program, const std::vector<char>& val) {
  const auto rules = reduct_rules(program, val);
  std::vector<int> vars;
  for (std::size_t i = 0; i < val.size(); ++i) {
    if (val[i]) vars.push_back(static_cast<int>(i));
  }
  const std::uint64_t full = (std::uint64_t{1} << vars.size()) - 1;
  std::vector<char> j(val.size(), 0);
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    for (std::size_t i = 0; i < vars.size(); ++i) j[vars[i]] = (mask >> i) & 1;
    const bool model = std::all_of(rules.begin(), rules.end(),
                                   [&](const Compiled::Rule* r) { return program.satisfied(*r, j); });
    if (model) return true;
  }
  return false;
}

void verify(const GroundProgram& program, const Interpretation& candidate) {
  if (!is_model(program, candidate) || !is_model(reduct(program, candidate), candidate)) {
    throw std::logic_error("internal error: emitted interpretation is not a model: " + candidate.str());
  }
}

}  // namespace

void for_each_answer_set(const GroundProgram& program, const SolveOptions& options,
                         const std::function<bool(const Interpretation&)>& visit) {
  const Compiled compiled(program);
  const std::size_t n = compiled.atoms().size();
  auto emit = [&](const std::vector<char>& val) {
    const auto found = compiled.to_interpretation(val);
    verify(program, found);
    return visit(found);
  };

  if (options.search) {
    std::vector<const Compiled::Rule*> rules;
    for (const auto& r : compiled.rules()) rules.push_back(&r);
    std::vector<int> vars(n);
    for (std::size_t i = 0; i < n; ++i) vars[i] = static_cast<int>(i);
    std::vector<char> val(n, 0);
    Search search(compiled, rules, vars, true);
    search.run(val, [&](const std::vector<char>& model) {
      return !has_smaller_model_search(compiled, model) && emit(model);
    });
    return;
  }
  if (n > options.brute_force_limit || n >= 63) {
    throw CapacityExceeded("candidate base has " + std::to_string(n) + " atoms, more than the brute-force limit of " +
                           std::to_string(options.brute_force_limit));
  }
  std::vector<char> val(n, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) val[i] = (mask >> i) & 1;
    const bool consistent = std::none_of(compiled.complements().begin(), compiled.complements().end(),
                                         [&](const auto& p) { return val[p.first] && val[p.second]; });
    if (!consistent) continue;
    const bool model = std::all_of(compiled.rules().begin(), compiled.rules().end(),
                                   [&](const Compiled::Rule& r) { return compiled.satisfied(r, val); });
    if (!model || has_smaller_model_brute(compiled, val)) continue;
    if (emit(val)) return;
  }
}

std::vector<Interpretation> enumerate_answer_sets(const GroundProgram& program, const SolveOptions& options) {
  std::vector<Interpretation> out;
  for_each_answer_set(program, options, [&](const Interpretation& i) {
    out.push_back(i);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Interpretation project(const Interpretation& interpretation) {
  Interpretation out;
  for (const auto& a : interpretation.atoms()) {
    if (!is_auxiliary_name(a.predicate)) out.insert(a);
  }
  return out;
}

std::vector<Interpretation> answer_sets(const GroundProgram& program, const SolveOptions& options, std::size_t limit) {
  std::set<Interpretation> found;
  for_each_answer_set(program, options, [&](const Interpretation& i) {
    found.insert(project(i));
    return limit != 0 && found.size() >= limit;
  });
  return {found.begin(), found.end()};
}

// ---- optimization ---------------------------------------------------------

Costs weak_cost(const GroundProgram& program, const Interpretation& interpretation, bool* non_integer) {
  std::set<std::vector<GroundTerm>> tuples;
  for (const auto& weak : program.weaks) {
    if (!satisfies_body(weak.body, interpretation)) continue;
    std::vector<GroundTerm> tuple{weak.weight, weak.level};
    tuple.insert(tuple.end(), weak.tuple.begin(), weak.tuple.end());
    tuples.insert(std::move(tuple));
  }
  Costs costs;
  for (const auto& t : tuples) {
    if (!t[0].is_integer() || !t[1].is_integer()) {
      if (non_integer != nullptr) *non_integer = true;
      continue;
    }
    costs[t[1].value] += t[0].value;
  }
  return costs;
}

bool dominates(const Costs& a, const Costs& b) {
  std::set<Integer> levels;
  for (const auto& [l, c] : a) levels.insert(l);
  for (const auto& [l, c] : b) levels.insert(l);
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    auto ia = a.find(*it);
    auto ib = b.find(*it);
    const Integer ca = ia == a.end() ? Integer(0) : ia->second;
    const Integer cb = ib == b.end() ? Integer(0) : ib->second;
    if (ca < cb) return true;
    if (ca > cb) return false;
  }
  return false;
}

std::set<Integer> weak_levels(const GroundProgram& program) {
  std::set<Integer> out;
  for (const auto& weak : program.weaks) {
    if (weak.level.is_integer()) out.insert(weak.level.value);
  }
  return out;
}

std::vector<RankedAnswerSet> optimal_answer_sets(const GroundProgram& program, const SolveOptions& options,
                                                 bool* non_integer) {
  std::vector<RankedAnswerSet> all;
  for (const auto& i : enumerate_answer_sets(program, options)) all.push_back({i, weak_cost(program, i, non_integer)});
  std::vector<RankedAnswerSet> out;
  for (const auto& candidate : all) {
    const bool dominated = std::any_of(all.begin(), all.end(),
                                       [&](const RankedAnswerSet& other) { return dominates(other.costs, candidate.costs); });
    if (!dominated) out.push_back({project(candidate.atoms), candidate.costs});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.atoms < b.atoms; });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.atoms == b.atoms; }),
            out.end());
  return out;
}

// ---- queries --------------------------------------------------------------

namespace {

bool match_query(const Term& pattern, const GroundTerm& value, Substitution& sigma) {
  switch (pattern.kind) {
    case Term::Kind::Anonymous:
      return true;
    case Term::Kind::Variable: {
      auto [it, fresh] = sigma.emplace(pattern.name, value);
      return fresh || it->second == value;
    }
    case Term::Kind::Functional:
      if (value.kind != GroundTerm::Kind::Functional || value.name != pattern.name ||
          value.args.size() != pattern.args.size()) {
        return false;
      }
      for (std::size_t i = 0; i < pattern.args.size(); ++i) {
        if (!match_query(pattern.args[i], value.args[i], sigma)) return false;
      }
      return true;
    default: {
      // Constants and ground arithmetic; safe queries have no variables here.
      std::set<std::string> vars;
      collect_variables(pattern, vars);
      for (const auto& v : vars) {
        if (!sigma.contains(v)) return false;
      }
      auto v = eval_arithmetic(pattern, sigma);
      return v && *v == value;
    }
  }
}

void first_occurrence(const Term& term, std::vector<std::string>& out) {
  if (term.kind == Term::Kind::Variable) {
    if (std::find(out.begin(), out.end(), term.name) == out.end()) out.push_back(term.name);
    return;
  }
  for (const auto& a : term.args) first_occurrence(a, out);
}

}  // namespace

QueryAnswer answer_query(const Query& query, const std::vector<Interpretation>& answer_sets) {
  QueryAnswer out;
  for (const auto& t : query.atom.args) first_occurrence(t, out.variables);
  if (answer_sets.empty()) {
    out.status = QueryAnswer::Status::Inconsistent;
    return out;
  }
  std::set<std::vector<GroundTerm>> answers;
  for (const auto& atom : answer_sets.front().atoms()) {
    if (atom.negated != query.atom.negated || atom.predicate != query.atom.predicate ||
        atom.args.size() != query.atom.args.size()) {
      continue;
    }
    // Variables are bound left to right, so arithmetic over them is checked
    // after the first pass.
    Substitution sigma;
    bool ok = true;
    for (std::size_t i = 0; i < atom.args.size() && ok; ++i) {
      if (query.atom.args[i].kind == Term::Kind::Arithmetic) continue;
      ok = match_query(query.atom.args[i], atom.args[i], sigma);
    }
    for (std::size_t i = 0; i < atom.args.size() && ok; ++i) {
      if (query.atom.args[i].kind == Term::Kind::Arithmetic) ok = match_query(query.atom.args[i], atom.args[i], sigma);
    }
    if (!ok) continue;
    const bool everywhere = std::all_of(answer_sets.begin() + 1, answer_sets.end(),
                                        [&](const Interpretation& i) { return i.contains(atom); });
    if (!everywhere) continue;
    std::vector<GroundTerm> row;
    for (const auto& v : out.variables) row.push_back(sigma.at(v));
    answers.insert(std::move(row));
  }
  if (out.variables.empty()) {
    out.status = answers.empty() ? QueryAnswer::Status::False : QueryAnswer::Status::True;
    return out;
  }
  out.status = QueryAnswer::Status::Substitutions;
  out.substitutions.assign(answers.begin(), answers.end());
  return out;
}

}  // namespace aspcore
