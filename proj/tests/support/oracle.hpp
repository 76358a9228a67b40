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

// Reference implementations used to cross-check the library. They share only
// the data types and the term order with the code under test.

#ifndef ASPCORE_TESTS_ORACLE_HPP
#define ASPCORE_TESTS_ORACLE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "aspcore/ground.hpp"
#include "aspcore/solve.hpp"

namespace aspcore::oracle {

using AtomSet = std::set<GroundAtom>;

// Every atom mentioned anywhere in the program.
std::vector<GroundAtom> program_atoms(const GroundProgram& program);

// Answer sets by the definition: consistent subsets I of the mentioned atoms
// that are models of P and whose reduct {r | body(r) true in I} has no model
// J strictly inside I. Throws std::length_error above `max_atoms`.
std::set<AtomSet> flp_answer_sets(const GroundProgram& program, std::size_t max_atoms = 20);

// Gelfond-Lifschitz answer sets for aggregate-free programs: drop rules with
// a false naf literal, drop the remaining naf literals, keep I when it is a
// minimal model of the resulting positive program.
std::set<AtomSet> gl_answer_sets(const GroundProgram& program, std::size_t max_atoms = 20);

// Drops atoms with auxiliary predicate names.
AtomSet project(const AtomSet& atoms);
std::set<AtomSet> project(const std::set<AtomSet>& sets);

std::set<AtomSet> to_sets(const std::vector<Interpretation>& interpretations);

// Per integer level, the sum of integer weights over the set of weak tuples
// whose body holds in I. Levels with zero cost are omitted.
std::map<Integer, Integer> costs(const GroundProgram& program, const AtomSet& interpretation);

// Answer sets not dominated by another answer set, with their costs.
std::map<AtomSet, std::map<Integer, Integer>> optimal(const GroundProgram& program, const std::set<AtomSet>& sets);

// Cautious answers by intersection: for a ground query, {{}} when it holds
// in all answer sets and {} otherwise; for a non-ground query, the tuples of
// named-variable values whose instance holds in every answer set (anonymous
// variables existential).
struct CautiousAnswer {
  bool inconsistent = false;
  std::vector<std::string> variables;
  std::set<std::vector<GroundTerm>> tuples;
};
CautiousAnswer cautious(const ClassicalAtom& query, const std::set<AtomSet>& sets);

}  // namespace aspcore::oracle

#endif  // ASPCORE_TESTS_ORACLE_HPP
