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

// Bottom-up instantiation. The smart grounder first computes the atoms that
// are derivable when negation and aggregates are ignored, joining positive
// body atoms against that set, and then emits every well-formed instance
// whose positive body atoms are in it. The naive grounder enumerates every
// substitution over the bounded universe.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "aspcore/analysis.hpp"
#include "aspcore/ground.hpp"
#include "ground_internal.hpp"

namespace aspcore {

namespace {

using PredicateKey = std::tuple<bool, std::string, std::size_t>;

PredicateKey key_of(const ClassicalAtom& a) { return {a.negated, a.predicate, a.args.size()}; }
PredicateKey key_of(const GroundAtom& a) { return {a.negated, a.predicate, a.args.size()}; }

class AtomStore {
 public:
  bool insert(const GroundAtom& atom) {
    auto [it, fresh] = atoms_.insert(atom);
    if (fresh) index_[key_of(atom)].push_back(&*it);
    return fresh;
  }

  bool contains(const GroundAtom& atom) const { return atoms_.contains(atom); }

  const std::vector<const GroundAtom*>& candidates(const PredicateKey& key) const {
    static const std::vector<const GroundAtom*> kNone;
    auto it = index_.find(key);
    return it == index_.end() ? kNone : it->second;
  }

 private:
  std::set<GroundAtom> atoms_;
  std::map<PredicateKey, std::vector<const GroundAtom*>> index_;
};

bool all_bound(const std::set<std::string>& vars, const Substitution& sigma) {
  return std::all_of(vars.begin(), vars.end(), [&](const std::string& v) { return sigma.contains(v); });
}

std::set<std::string> vars_of(const Term& t) {
  std::set<std::string> out;
  collect_variables(t, out);
  return out;
}

// Unifies `pattern` with `value`, extending sigma. Arithmetic subterms whose
// variables are not all bound yet are skipped; the instance built at the end
// re-checks them.
bool match(const Term& pattern, const GroundTerm& value, Substitution& sigma, std::vector<std::string>& trail) {
  switch (pattern.kind) {
    case Term::Kind::Integer:
      return value.is_integer() && value.value == pattern.value;
    case Term::Kind::Symbolic:
      return value.kind == GroundTerm::Kind::Symbolic && value.name == pattern.name;
    case Term::Kind::String:
      return value.kind == GroundTerm::Kind::String && value.name == pattern.name;
    case Term::Kind::Anonymous:
      return true;
    case Term::Kind::Variable: {
      auto it = sigma.find(pattern.name);
      if (it != sigma.end()) return it->second == value;
      sigma.emplace(pattern.name, value);
      trail.push_back(pattern.name);
      return true;
    }
    case Term::Kind::Functional:
      if (value.kind != GroundTerm::Kind::Functional || value.name != pattern.name ||
          value.args.size() != pattern.args.size()) {
        return false;
      }
      for (std::size_t i = 0; i < pattern.args.size(); ++i) {
        if (!match(pattern.args[i], value.args[i], sigma, trail)) return false;
      }
      return true;
    case Term::Kind::Arithmetic: {
      if (!all_bound(vars_of(pattern), sigma)) return true;
      auto v = eval_arithmetic(pattern, sigma);
      return v && *v == value;
    }
  }
  return false;
}

void undo(Substitution& sigma, std::vector<std::string>& trail, std::size_t mark) {
  while (trail.size() > mark) {
    sigma.erase(trail.back());
    trail.pop_back();
  }
}

std::optional<GroundAtom> ground_atom(const ClassicalAtom& atom, const Substitution& sigma) {
  GroundAtom out{atom.negated, atom.predicate, {}};
  for (const auto& t : atom.args) {
    auto g = eval_arithmetic(t, sigma);
    if (!g) return std::nullopt;
    out.args.push_back(std::move(*g));
  }
  return out;
}

std::string describe_bound(const GroundAtom& atom, const UniverseBounds& bounds) {
  return "derivable atom " + to_string(atom) + " exceeds the declared bounds (max integer " +
         bounds.max_int.str() + ", max nesting " + std::to_string(bounds.max_nesting) + ")";
}

class Grounder {
 public:
  Grounder(const Program& program, const GroundOptions& options, GroundStats* stats)
      : program_(program), options_(options), stats_(stats) {}

  GroundProgram run() {
    universe_ = Universe::build(program_, options_.bounds);
    return options_.naive ? run_naive() : run_smart();
  }

 private:
  // ---- smart ---------------------------------------------------------------

  GroundProgram run_smart() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rule : program_.rules) {
        if (rule.is_constraint()) continue;
        const auto globals = global_variables(rule);
        for_each_binding(rule.body, globals, [&](const Substitution& sigma) {
          auto instance = build_rule(rule, sigma, false);
          if (!instance) return;
          for (const auto& h : instance->head) {
            if (derivable_.insert(h)) {
              changed = true;
              check_bounds(h);
            }
          }
        });
      }
    }

    GroundProgram out;
    out.query = program_.query;
    for (const auto& rule : program_.rules) {
      const auto globals = global_variables(rule);
      for_each_binding(rule.body, globals, [&](const Substitution& sigma) {
        note_bindings(sigma);
        if (auto instance = build_rule(rule, sigma, false)) out.rules.push_back(std::move(*instance));
      });
    }
    for (const auto& weak : program_.weaks) {
      const auto globals = global_variables(weak);
      for_each_binding(weak.body, globals, [&](const Substitution& sigma) {
        note_bindings(sigma);
        if (auto instance = build_weak(weak, sigma, false)) out.weaks.push_back(std::move(*instance));
      });
    }
    finish(out);
    return out;
  }

  void check_bounds(const GroundAtom& atom) const {
    for (const auto& a : atom.args) {
      if (!universe_.within(a)) throw BoundExceeded(describe_bound(atom, options_.bounds));
    }
  }

  void note_bindings(const Substitution& sigma) {
    if (stats_ == nullptr) return;
    for (const auto& [name, value] : sigma) {
      if (!universe_.within(value)) ++stats_->out_of_bound_bindings;
    }
  }

  void count_instance() {
    if (++instances_ > options_.max_instances) {
      throw CapacityExceeded("grounding produced more than " + std::to_string(options_.max_instances) +
                             " instances");
    }
  }

  using Callback = std::function<void(const Substitution&)>;

  // Calls `fn` once per substitution of `needed` reachable by joining the
  // literals against the derivable atoms. `outer` holds already bound
  // variables (the globals, when instantiating an aggregate element).
  void for_each_binding(const std::vector<Literal>& literals, const std::set<std::string>& needed, const Callback& fn,
                        const Substitution& outer = {}, const std::set<std::string>& scope = {}) {
    Substitution sigma = outer;
    std::vector<std::string> trail;
    std::vector<const Literal*> pending;
    for (const auto& l : literals) pending.push_back(&l);
    const std::set<std::string>& globals = scope.empty() ? needed : scope;
    join(pending, needed, globals, sigma, trail, fn);
  }

  void join(std::vector<const Literal*> pending, const std::set<std::string>& needed,
            const std::set<std::string>& globals, Substitution& sigma, std::vector<std::string>& trail,
            const Callback& fn) {
    // Filters and literals that never bind anything go first.
    for (std::size_t i = 0; i < pending.size();) {
      const Literal& l = *pending[i];
      bool drop = false;
      if (l.naf) {
        drop = true;
      } else if (const auto* b = l.builtin()) {
        if (all_bound(vars_of(b->left), sigma) && all_bound(vars_of(b->right), sigma)) {
          auto left = eval_arithmetic(b->left, sigma);
          auto right = eval_arithmetic(b->right, sigma);
          if (!left || !right || !compare_holds(*left, b->rel, *right)) return;
          drop = true;
        }
      } else if (const auto* a = l.classical()) {
        std::set<std::string> vars;
        collect_variables(*a, vars);
        if (all_bound(vars, sigma)) {
          auto g = ground_atom(*a, sigma);
          if (!g || !derivable_.contains(*g)) return;
          drop = true;
        }
      } else if (const auto* g = l.aggregate()) {
        drop = !g->right || g->right->rel != Relation::Equal || all_bound(vars_of(g->right->term), sigma);
      }
      if (drop) {
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    if (pending.empty()) {
      if (!all_bound(needed, sigma)) throw std::logic_error("grounding reached an unbound variable (unsafe input)");
      count_instance();
      fn(sigma);
      return;
    }

    auto rest = [&](std::size_t chosen) {
      auto copy = pending;
      copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(chosen));
      return copy;
    };

    // Equalities with one evaluable side.
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const auto* b = pending[i]->builtin();
      if (b == nullptr || b->rel != Relation::Equal) continue;
      for (int side = 0; side < 2; ++side) {
        const Term& known = side == 0 ? b->left : b->right;
        const Term& pattern = side == 0 ? b->right : b->left;
        if (!all_bound(vars_of(known), sigma)) continue;
        auto value = eval_arithmetic(known, sigma);
        if (!value) return;
        const std::size_t mark = trail.size();
        if (match(pattern, *value, sigma, trail)) join(rest(i), needed, globals, sigma, trail, fn);
        undo(sigma, trail, mark);
        return;
      }
    }

    // Positive classical atoms, most bound arguments first.
    std::size_t best = pending.size();
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const auto* a = pending[i]->classical();
      if (a == nullptr) continue;
      const std::size_t size = derivable_.candidates(key_of(*a)).size();
      if (best == pending.size() || size < best_size) {
        best = i;
        best_size = size;
      }
    }
    if (best != pending.size()) {
      const auto& atom = *pending[best]->classical();
      const auto& candidates = derivable_.candidates(key_of(atom));
      const auto remaining = rest(best);
      const std::size_t count = candidates.size();
      for (std::size_t c = 0; c < count; ++c) {
        const GroundAtom* candidate = candidates[c];
        const std::size_t mark = trail.size();
        bool ok = true;
        for (std::size_t k = 0; k < atom.args.size() && ok; ++k) {
          ok = match(atom.args[k], candidate->args[k], sigma, trail);
        }
        if (ok) join(remaining, needed, globals, sigma, trail, fn);
        undo(sigma, trail, mark);
      }
      return;
    }

    // Aggregates with an `=` guard whose element globals are bound.
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const auto* g = pending[i]->aggregate();
      if (g == nullptr) continue;
      std::set<std::string> element_globals;
      for (const auto& e : g->elements) {
        std::set<std::string> vars;
        collect_variables(e, vars);
        for (const auto& v : vars) {
          if (globals.contains(v)) element_globals.insert(v);
        }
      }
      if (!all_bound(element_globals, sigma)) continue;
      std::vector<GroundAggregateElement> elements;
      for (const auto& e : g->elements) {
        for (auto& ge : smart_elements(e, sigma, globals)) elements.push_back(std::move(ge));
      }
      canonicalize(elements);
      const auto remaining = rest(i);
      for (const auto& value : aggregate_values(g->function, elements)) {
        const std::size_t mark = trail.size();
        if (match(g->right->term, value, sigma, trail)) join(remaining, needed, globals, sigma, trail, fn);
        undo(sigma, trail, mark);
      }
      return;
    }
    throw std::logic_error("grounding cannot bind the remaining variables (unsafe input)");
  }

  // Every value `#f{elements}` can take under some interpretation.
  std::vector<GroundTerm> aggregate_values(AggregateFunction fn, const std::vector<GroundAggregateElement>& elements) {
    std::set<std::vector<GroundTerm>> tuples;
    for (const auto& e : elements) tuples.insert(e.terms);
    std::vector<GroundTerm> out;
    switch (fn) {
      case AggregateFunction::Count:
        for (std::size_t n = 0; n <= tuples.size(); ++n) out.push_back(GroundTerm::integer(n));
        break;
      case AggregateFunction::Sum: {
        std::set<Integer> sums{0};
        for (const auto& t : tuples) {
          if (t.empty() || !t.front().is_integer()) continue;
          std::set<Integer> next = sums;
          for (const auto& s : sums) next.insert(s + t.front().value);
          sums = std::move(next);
          if (sums.size() > 100000) throw CapacityExceeded("too many candidate values for a #sum aggregate");
        }
        for (const auto& s : sums) out.push_back(GroundTerm::integer(s));
        break;
      }
      case AggregateFunction::Max:
      case AggregateFunction::Min: {
        std::set<GroundTerm> firsts;
        for (const auto& t : tuples) {
          if (!t.empty()) firsts.insert(t.front());
        }
        out.assign(firsts.begin(), firsts.end());
        break;
      }
    }
    return out;
  }

  std::vector<GroundAggregateElement> smart_elements(const AggregateElement& element, const Substitution& sigma,
                                                     const std::set<std::string>& globals) {
    std::set<std::string> vars;
    collect_variables(element, vars);
    std::set<std::string> locals;
    Substitution outer;
    for (const auto& v : vars) {
      if (globals.contains(v)) {
        outer.emplace(v, sigma.at(v));
      } else {
        locals.insert(v);
      }
    }
    std::vector<GroundAggregateElement> out;
    for_each_binding(
        element.condition, locals,
        [&](const Substitution& full) {
          note_bindings(full);
          auto g = ground_element(element, full);
          if (!g) return;
          std::vector<GroundConditionLiteral> kept;
          for (auto& c : g->condition) {
            if (auto* b = std::get_if<GroundBuiltin>(&c.atom)) {
              if (!b->holds()) return;
              continue;
            }
            const auto& a = std::get<GroundAtom>(c.atom);
            if (!c.naf && !derivable_.contains(a)) return;
            kept.push_back(std::move(c));
          }
          g->condition = std::move(kept);
          out.push_back(std::move(*g));
        },
        outer, locals);
    return out;
  }

  // ---- instance construction ----------------------------------------------

  // One ground literal, or nullopt when sigma is not well-formed for it. `skip`
  // is set for literals that are dropped as always true.
  std::optional<GroundLiteral> build_literal(const Literal& literal, const Substitution& sigma,
                                             const std::set<std::string>& globals, bool naive, bool& skip,
                                             bool& impossible) {
    skip = false;
    impossible = false;
    if (const auto* a = literal.classical()) {
      auto g = ground_atom(*a, sigma);
      if (!g) return std::nullopt;
      if (!naive && !literal.naf && !derivable_.contains(*g)) impossible = true;
      return GroundLiteral{literal.naf, std::move(*g)};
    }
    if (const auto* b = literal.builtin()) {
      auto left = eval_arithmetic(b->left, sigma);
      auto right = eval_arithmetic(b->right, sigma);
      if (!left || !right) return std::nullopt;
      GroundBuiltin builtin{std::move(*left), b->rel, std::move(*right)};
      if (!naive) {
        if (!builtin.holds()) impossible = true;
        skip = true;
      }
      return GroundLiteral{false, std::move(builtin)};
    }
    const auto& g = *literal.aggregate();
    if (!g.right || g.left) throw std::logic_error("aggregate guards are not normalized");
    auto bound = eval_arithmetic(g.right->term, sigma);
    if (!bound) return std::nullopt;
    GroundAggregate out;
    out.function = g.function;
    out.rel = g.right->rel;
    out.bound = std::move(*bound);
    for (const auto& e : g.elements) {
      Substitution context;
      std::set<std::string> vars;
      collect_variables(e, vars);
      for (const auto& v : vars) {
        if (globals.contains(v)) context.emplace(v, sigma.at(v));
      }
      auto elements = naive ? instantiate_element(e, universe_, context) : smart_elements(e, sigma, globals);
      for (auto& ge : elements) out.elements.push_back(std::move(ge));
    }
    canonicalize(out.elements);
    return GroundLiteral{literal.naf, std::move(out)};
  }

  std::optional<std::vector<GroundLiteral>> build_body(const std::vector<Literal>& body, const Substitution& sigma,
                                                       const std::set<std::string>& globals, bool naive) {
    std::vector<GroundLiteral> out;
    for (const auto& l : body) {
      bool skip = false;
      bool impossible = false;
      auto g = build_literal(l, sigma, globals, naive, skip, impossible);
      if (!g || impossible) return std::nullopt;
      if (!skip) out.push_back(std::move(*g));
    }
    return out;
  }

  std::optional<GroundRule> build_rule(const Rule& rule, const Substitution& sigma, bool naive) {
    const auto* d = rule.disjunction();
    if (d == nullptr) throw std::logic_error("choice rules must be desugared before grounding");
    GroundRule out;
    for (const auto& a : d->atoms) {
      auto g = ground_atom(a, sigma);
      if (!g) return std::nullopt;
      out.head.push_back(std::move(*g));
    }
    auto body = build_body(rule.body, sigma, global_variables(rule), naive);
    if (!body) return std::nullopt;
    out.body = std::move(*body);
    return out;
  }

  std::optional<GroundWeakConstraint> build_weak(const WeakConstraint& weak, const Substitution& sigma, bool naive) {
    GroundWeakConstraint out;
    auto weight = eval_arithmetic(weak.weight, sigma);
    auto level = eval_arithmetic(weak.level, sigma);
    if (!weight || !level) return std::nullopt;
    out.weight = std::move(*weight);
    out.level = std::move(*level);
    for (const auto& t : weak.tuple) {
      auto g = eval_arithmetic(t, sigma);
      if (!g) return std::nullopt;
      out.tuple.push_back(std::move(*g));
    }
    auto body = build_body(weak.body, sigma, global_variables(weak), naive);
    if (!body) return std::nullopt;
    out.body = std::move(*body);
    return out;
  }

  // ---- naive ---------------------------------------------------------------

  void for_each_assignment(const std::set<std::string>& vars, const Callback& fn) {
    const std::vector<std::string> names(vars.begin(), vars.end());
    const auto& terms = universe_.terms();
    double total = 1;
    for (std::size_t i = 0; i < names.size(); ++i) total *= static_cast<double>(terms.size());
    if (total > static_cast<double>(options_.max_instances)) {
      throw CapacityExceeded("naive grounding needs " + std::to_string(static_cast<long double>(total)) +
                             " substitutions");
    }
    if (!names.empty() && terms.empty()) return;
    Substitution sigma;
    std::vector<std::size_t> index(names.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < names.size(); ++i) sigma.insert_or_assign(names[i], terms[index[i]]);
      count_instance();
      fn(sigma);
      std::size_t pos = 0;
      while (pos < names.size() && ++index[pos] == terms.size()) index[pos++] = 0;
      if (pos == names.size()) break;
    }
  }

  GroundProgram run_naive() {
    GroundProgram out;
    out.query = program_.query;
    for (const auto& rule : program_.rules) {
      for_each_assignment(global_variables(rule), [&](const Substitution& sigma) {
        if (auto instance = build_rule(rule, sigma, true)) out.rules.push_back(std::move(*instance));
      });
    }
    for (const auto& weak : program_.weaks) {
      for_each_assignment(global_variables(weak), [&](const Substitution& sigma) {
        if (auto instance = build_weak(weak, sigma, true)) out.weaks.push_back(std::move(*instance));
      });
    }
    for (const auto& atom : possibly_derivable(out)) check_bounds(atom);
    finish(out);
    return out;
  }

  void finish(GroundProgram& out) {
    auto dedupe = [](auto& statements) {
      using Statement = typename std::decay_t<decltype(statements)>::value_type;
      std::vector<std::pair<std::string, Statement>> keyed;
      for (auto& s : statements) keyed.emplace_back(to_string(s), std::move(s));
      std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      keyed.erase(std::unique(keyed.begin(), keyed.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  keyed.end());
      statements.clear();
      for (auto& [text, s] : keyed) statements.push_back(std::move(s));
    };
    dedupe(out.rules);
    dedupe(out.weaks);
    if (stats_ != nullptr) stats_->rule_instances = out.rules.size() + out.weaks.size();
  }

  const Program& program_;
  GroundOptions options_;
  GroundStats* stats_;
  Universe universe_;
  AtomStore derivable_;
  std::size_t instances_ = 0;
};

}  // namespace

std::set<GroundAtom> possibly_derivable(const GroundProgram& program) {
  // Counter-based forward chaining: a rule fires once all of its distinct
  // positive body atoms are derived.
  std::map<GroundAtom, std::vector<std::size_t>> watchers;
  std::vector<std::size_t> missing(program.rules.size(), 0);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    const auto& rule = program.rules[i];
    bool blocked = false;
    std::set<GroundAtom> positives;
    for (const auto& l : rule.body) {
      if (const auto* b = l.builtin(); b != nullptr && !l.naf && !b->holds()) blocked = true;
      if (const auto* a = l.classical(); a != nullptr && !l.naf) positives.insert(*a);
    }
    if (blocked || rule.head.empty()) continue;
    missing[i] = positives.size();
    for (const auto& a : positives) watchers[a].push_back(i);
    if (positives.empty()) queue.push_back(i);
  }
  std::set<GroundAtom> derived;
  while (!queue.empty()) {
    const std::size_t i = queue.back();
    queue.pop_back();
    for (const auto& h : program.rules[i].head) {
      if (!derived.insert(h).second) continue;
      auto it = watchers.find(h);
      if (it == watchers.end()) continue;
      for (auto r : it->second) {
        if (--missing[r] == 0) queue.push_back(r);
      }
    }
  }
  return derived;
}

GroundProgram ground_program(const Program& program, const GroundOptions& options, GroundStats* stats) {
  return Grounder(program, options, stats).run();
}

}  // namespace aspcore
