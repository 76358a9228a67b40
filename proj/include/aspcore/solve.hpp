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

#ifndef ASPCORE_SOLVE_HPP
#define ASPCORE_SOLVE_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aspcore/ground.hpp"

namespace aspcore {

// A consistent set of ground classical atoms, ordered by the term order.
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(std::initializer_list<GroundAtom> atoms);

  // Throws std::invalid_argument if the complement of `atom` is present.
  void insert(const GroundAtom& atom);
  void erase(const GroundAtom& atom) { atoms_.erase(atom); }
  bool contains(const GroundAtom& atom) const { return atoms_.contains(atom); }

  const std::set<GroundAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  // `{a, -b, p(1)}`
  std::string str() const;

  bool operator==(const Interpretation&) const = default;
  auto operator<=>(const Interpretation& other) const { return atoms_ <=> other.atoms_; }

 private:
  std::set<GroundAtom> atoms_;
};

// Result of an aggregate function: a term or one of the infinities, which
// lie below and above every term.
struct AggregateValue {
  enum class Kind { Term, PlusInfinity, MinusInfinity };

  Kind kind = Kind::Term;
  GroundTerm term;

  static AggregateValue of(GroundTerm t) { return {Kind::Term, std::move(t)}; }
  static AggregateValue plus_infinity() { return {Kind::PlusInfinity, {}}; }
  static AggregateValue minus_infinity() { return {Kind::MinusInfinity, {}}; }

  bool operator==(const AggregateValue&) const = default;
};

// `value rel bound`, with -inf below and +inf above every term.
bool compare_holds(const AggregateValue& value, Relation rel, const GroundTerm& bound);

bool satisfies_builtin(const GroundTerm& left, Relation rel, const GroundTerm& right);

// Applies the function to the set of tuples whose conditions hold in I.
// #sum adds integer first components; #max/#min range over non-empty tuples.
AggregateValue eval_aggregate(AggregateFunction fn, const std::vector<GroundAggregateElement>& elements,
                              const Interpretation& interpretation);

bool satisfies_literal(const GroundLiteral& literal, const Interpretation& interpretation);
bool satisfies_body(const std::vector<GroundLiteral>& body, const Interpretation& interpretation);
bool is_model(const GroundProgram& program, const Interpretation& interpretation);

// The rules whose body holds in I (weak constraints are not part of it).
GroundProgram reduct(const GroundProgram& program, const Interpretation& interpretation);

struct SolveOptions {
  // Largest candidate base enumerated subset by subset.
  std::size_t brute_force_limit = 24;
  // Use depth-first search with early rule checks instead of plain subset
  // enumeration; no size limit.
  bool search = false;
};

// Answer sets including auxiliary atoms, sorted. Throws CapacityExceeded
// when the candidate base is larger than the brute-force limit.
// Calls `visit` on each answer set (unprojected) in enumeration order until it
// returns true.
void for_each_answer_set(const GroundProgram& program, const SolveOptions& options,
                         const std::function<bool(const Interpretation&)>& visit);

std::vector<Interpretation> enumerate_answer_sets(const GroundProgram& program, const SolveOptions& options = {});

// Drops atoms whose predicate is an auxiliary name.
Interpretation project(const Interpretation& interpretation);

// Answer sets over the user signature, sorted and without duplicates.
// Projected answer sets, sorted and without duplicates. A non-zero `limit`
// stops the enumeration once that many distinct sets are found.
std::vector<Interpretation> answer_sets(const GroundProgram& program, const SolveOptions& options = {},
                                        std::size_t limit = 0);

// Cost per integer level.
using Costs = std::map<Integer, Integer>;

// Sums the integer weights of the distinct weak tuples whose body holds in I,
// per integer level. Sets `non_integer` if some applicable tuple has a
// non-integer weight or level; those tuples do not contribute.
Costs weak_cost(const GroundProgram& program, const Interpretation& interpretation, bool* non_integer = nullptr);

// Whether costs `a` dominate `b`: strictly lower at some level and equal at
// every higher level.
bool dominates(const Costs& a, const Costs& b);

// Integer levels mentioned by the program's weak constraints.
std::set<Integer> weak_levels(const GroundProgram& program);

struct RankedAnswerSet {
  Interpretation atoms;  // projected
  Costs costs;
};

// Non-dominated answer sets, projected and sorted.
std::vector<RankedAnswerSet> optimal_answer_sets(const GroundProgram& program, const SolveOptions& options = {},
                                                 bool* non_integer = nullptr);

struct QueryAnswer {
  enum class Status { True, False, Substitutions, Inconsistent };

  Status status = Status::False;
  std::vector<std::string> variables;  // named query variables, first occurrence first
  std::vector<std::vector<GroundTerm>> substitutions;
};

// Cautious reasoning over the given answer sets. Anonymous variables of the
// query are existential and not reported. No answer sets gives Inconsistent.
QueryAnswer answer_query(const Query& query, const std::vector<Interpretation>& answer_sets);

}  // namespace aspcore

#endif  // ASPCORE_SOLVE_HPP
