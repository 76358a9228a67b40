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

#include "generators.hpp"

#include <algorithm>
#include <vector>

namespace aspcore::gen {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[uniform(rng, 0, items.size() - 1)];
}

const std::vector<Relation> kRelations = {Relation::Less,     Relation::LessOrEqual, Relation::Equal,
                                          Relation::NotEqual, Relation::Greater,     Relation::GreaterOrEqual};

const std::vector<AggregateFunction> kFunctions = {AggregateFunction::Count, AggregateFunction::Sum,
                                                   AggregateFunction::Max, AggregateFunction::Min};

GroundTerm small_term(Rng& rng) {
  switch (uniform(rng, 0, 5)) {
    case 0:
      return GroundTerm::symbolic(chance(rng, 0.5) ? "a" : "b");
    case 1:
      return GroundTerm::integer(-1);
    default:
      return GroundTerm::integer(static_cast<long long>(uniform(rng, 0, 3)));
  }
}

std::vector<GroundAtom> atom_pool(bool strong_negation) {
  std::vector<GroundAtom> pool;
  for (const char* n : {"a", "b", "c", "d", "e"}) pool.push_back({false, n, {}});
  for (int i = 1; i <= 3; ++i) pool.push_back({false, "p", {GroundTerm::integer(i)}});
  pool.push_back({false, "q", {GroundTerm::symbolic("a")}});
  pool.push_back({false, "q", {GroundTerm::integer(1)}});
  pool.push_back({false, "r", {GroundTerm::integer(1), GroundTerm::string("s")}});
  if (strong_negation) {
    pool.push_back({true, "a", {}});
    pool.push_back({true, "p", {GroundTerm::integer(1)}});
    pool.push_back({true, "q", {GroundTerm::symbolic("a")}});
  }
  return pool;
}

GroundBuiltin random_builtin(Rng& rng) { return {small_term(rng), pick(rng, kRelations), small_term(rng)}; }

GroundAggregate random_aggregate(Rng& rng, const std::vector<GroundAtom>& atoms, bool naf) {
  GroundAggregate g;
  g.function = pick(rng, kFunctions);
  const std::size_t n = uniform(rng, 0, 3);
  for (std::size_t i = 0; i < n; ++i) {
    GroundAggregateElement e;
    const std::size_t arity = uniform(rng, 0, 2) == 0 ? 0 : uniform(rng, 1, 2);
    for (std::size_t k = 0; k < arity; ++k) e.terms.push_back(small_term(rng));
    const std::size_t conditions = uniform(rng, 0, 2);
    for (std::size_t k = 0; k < conditions; ++k) {
      if (chance(rng, 0.1)) {
        e.condition.push_back({false, random_builtin(rng)});
      } else {
        e.condition.push_back({naf && chance(rng, 0.25), pick(rng, atoms)});
      }
    }
    g.elements.push_back(std::move(e));
  }
  g.rel = pick(rng, kRelations);
  g.bound = chance(rng, 0.1) ? GroundTerm::symbolic("a") : GroundTerm::integer(static_cast<long long>(uniform(rng, 0, 4)));
  if (chance(rng, 0.1)) g.bound = GroundTerm::integer(-1);
  return g;
}

std::vector<GroundLiteral> random_body(Rng& rng, const std::vector<GroundAtom>& atoms, const GroundShape& shape,
                                       std::size_t max_size) {
  std::vector<GroundLiteral> body;
  const std::size_t n = uniform(rng, 0, max_size);
  for (std::size_t i = 0; i < n; ++i) {
    const double roll = std::uniform_real_distribution<double>(0, 1)(rng);
    if (shape.aggregates && roll < 0.25) {
      body.push_back({shape.naf && chance(rng, 0.2), random_aggregate(rng, atoms, shape.naf)});
    } else if (roll < 0.32) {
      body.push_back({false, random_builtin(rng)});
    } else {
      body.push_back({shape.naf && chance(rng, 0.4), pick(rng, atoms)});
    }
  }
  return body;
}

}  // namespace

GroundTerm term(Rng& rng, std::size_t depth) {
  const std::size_t kind = uniform(rng, 0, depth == 0 ? 2 : 3);
  switch (kind) {
    case 0: {
      const long long v = static_cast<long long>(uniform(rng, 0, 6)) - 3;
      return GroundTerm::integer(v);
    }
    case 1:
      return GroundTerm::symbolic(pick(rng, std::vector<std::string>{"a", "b", "ab", "B", "z"}));
    case 2:
      return GroundTerm::string(pick(rng, std::vector<std::string>{"", "a", "b", "ab", "A", "z"}));
    default: {
      std::vector<GroundTerm> args;
      const std::size_t arity = uniform(rng, 1, 3);
      for (std::size_t i = 0; i < arity; ++i) args.push_back(term(rng, depth - 1));
      return GroundTerm::functional(pick(rng, std::vector<std::string>{"f", "g", "fa"}), std::move(args));
    }
  }
}

GroundProgram ground_program(Rng& rng, const GroundShape& shape) {
  auto pool = atom_pool(shape.strong_negation);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(pool.size(), uniform(rng, 1, shape.max_atoms)));

  GroundProgram program;
  const std::size_t rules = uniform(rng, 1, shape.max_rules);
  for (std::size_t i = 0; i < rules; ++i) {
    GroundRule r;
    const std::size_t head = chance(rng, 0.15) ? 0 : (shape.disjunction ? uniform(rng, 1, 3) : 1);
    for (std::size_t k = 0; k < head; ++k) r.head.push_back(pick(rng, pool));
    r.body = random_body(rng, pool, shape, 3);
    if (r.head.empty() && r.body.empty()) continue;
    program.rules.push_back(std::move(r));
  }
  if (shape.max_levels > 0) {
    const std::size_t weaks = uniform(rng, 1, 4);
    for (std::size_t i = 0; i < weaks; ++i) {
      GroundWeakConstraint w;
      w.body = random_body(rng, pool, shape, 2);
      w.weight = chance(rng, 0.08) ? GroundTerm::symbolic("w")
                                   : GroundTerm::integer(static_cast<long long>(uniform(rng, 0, 4)) - 1);
      w.level = GroundTerm::integer(static_cast<long long>(uniform(rng, 0, shape.max_levels - 1)));
      if (chance(rng, 0.5)) w.tuple.push_back(small_term(rng));
      program.weaks.push_back(std::move(w));
    }
  }
  return program;
}

namespace {

std::string facts(Rng& rng) {
  std::string out;
  bool any = false;
  for (int i = 0; i <= 3; ++i) {
    if (chance(rng, 0.6) || (i == 3 && !any)) {
      out += "d(" + std::to_string(i) + "). ";
      any = true;
    }
  }
  const std::vector<std::string> second = {"0", "1", "2", "a"};
  for (int i = 0; i <= 2; ++i) {
    for (const auto& s : second) {
      if (chance(rng, 0.2)) out += "e(" + std::to_string(i) + "," + s + "). ";
    }
  }
  if (chance(rng, 0.5)) out += "c(f(1)). ";
  if (chance(rng, 0.5)) out += "c(a). ";
  return out + "\n";
}

}  // namespace

std::string nonground_program(Rng& rng) {
  static const std::vector<std::string> lower = {
      "p(X) :- d(X), not q(X).",
      "q(X) :- d(X), not p(X).",
      "p(X) | q(X) :- d(X).",
      "r(X,Y) :- e(X,Y), not p(X).",
      "p(Y) :- e(X,Y), X < Y.",
      "q(Y) :- d(X), Y = X+1.",
      "p(X) :- r(X,_).",
      "q(X) :- p(X), X != 2.",
      "{p(X) : d(X)} <= 1.",
      "{q(X)} :- d(X), X > 1.",
      "r(X,f(X)) :- d(X), not q(X).",
      "p(X) :- c(X).",
      "-p(X) :- d(X), not p(X).",
      ":- p(X), q(X), X > 0.",
      "q(X) :- p(X), not r(X,X).",
      "p(X) :- q(X), X*2 = 4.",
      "p(X) :- q(X), 4/X = 2.",
      "q(X) :- e(X,_), not -p(X).",
      "1 <= {p(X) : d(X); q(Y) : e(Y,_)} <= 2 :- d(0).",
      "r(X,Y) :- d(X), d(Y), X < Y, not q(Y).",
  };
  static const std::vector<std::string> upper = {
      "s :- #count{X : p(X)} > 1.",
      "t(N) :- #count{X : q(X)} = N, d(N).",
      "t(M) :- #max{X : p(X), d(X)} = M.",
      "u :- not s, #sum{X,Y : r(X,Y)} >= 2.",
      "s :- #min{X : q(X)} < 2.",
      ":- not s, t(2).",
      "u :- 1 < #count{X : p(X); Y : q(Y)} <= 3.",
      "t(X) :- #count{Y : r(X,Y)} = 1, d(X).",
      "s :- not #count{X : p(X)} != 1.",
      "t(S) :- S = #sum{X : q(X), d(X)}, d(S).",
      "u :- t(X), not s, X >= 1.",
      "s :- #max{X : q(X)} = M, d(M), M > 1.",
  };
  std::string out = facts(rng);
  const std::size_t n_lower = uniform(rng, 2, 5);
  for (std::size_t i = 0; i < n_lower; ++i) out += pick(rng, lower) + "\n";
  const std::size_t n_upper = uniform(rng, 0, 3);
  for (std::size_t i = 0; i < n_upper; ++i) out += pick(rng, upper) + "\n";
  return out;
}

std::string query_program(Rng& rng) {
  static const std::vector<std::string> rules = {
      "p(X) :- d(X), not q(X).",
      "q(X) :- d(X), not p(X).",
      "p(X) | q(X) :- d(X).",
      "r(X,Y) :- d(X), d(Y), X < Y, not q(Y).",
      "s :- p(X), q(Y), X < Y.",
      ":- p(X), q(X), X > 1.",
      ":- not s, p(0).",
      "s | t :- d(2).",
      "-p(X) :- d(X), not p(X).",
      "p(1) :- not s.",
      "t :- #count{X : p(X)} >= 2.",
      "q(X) :- r(_,X).",
  };
  static const std::vector<std::string> queries = {"p(X)?", "q(X)?", "q(1)?",   "p(0)?",  "s?",       "t?",
                                                   "r(X,Y)?", "r(X,_)?", "-p(X)?", "r(_,_)?", "r(0,X)?"};
  std::string out;
  for (int i = 0; i <= 2; ++i) {
    if (chance(rng, 0.75)) out += "d(" + std::to_string(i) + "). ";
  }
  out += "\n";
  const std::size_t n = uniform(rng, 1, 4);
  for (std::size_t i = 0; i < n; ++i) out += pick(rng, rules) + "\n";
  return out + pick(rng, queries) + "\n";
}

}  // namespace aspcore::gen
