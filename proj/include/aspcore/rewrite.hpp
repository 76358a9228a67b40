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

#ifndef ASPCORE_REWRITE_HPP
#define ASPCORE_REWRITE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "aspcore/syntax.hpp"

namespace aspcore {

// Hands out one auxiliary name per user predicate name, `__aux_<p>_<n>`.
// Names already used by the program (as predicates or functors) are skipped.
class AuxNameGenerator {
 public:
  explicit AuxNameGenerator(const Program& program);

  const std::string& name_for(const std::string& predicate);

 private:
  std::set<std::string> taken_;
  std::map<std::string, std::string> assigned_;
  int counter_ = 0;
};

bool is_auxiliary_name(std::string_view name);

// Replaces every `_` by a variable `V<n>` that does not otherwise occur in
// the statement. Distinct occurrences get distinct names.
Program name_anonymous_variables(const Program& program);

// Moves left guards to the right via the inverse relation and splits
// two-bound aggregate and choice atoms.
std::vector<Rule> normalize_guards(const Rule& rule);
std::vector<WeakConstraint> normalize_guards(const WeakConstraint& weak);
Program normalize_guards(const Program& program);

// Expects normalized guards. Replaces every choice rule by one disjunctive
// rule per element plus a counting constraint.
Program desugar_choice_rules(const Program& program);

// All of the above, in order. The result only holds disjunctive rules, weak
// constraints and aggregates with a single right guard.
Program desugar(const Program& program);

}  // namespace aspcore

#endif  // ASPCORE_REWRITE_HPP
