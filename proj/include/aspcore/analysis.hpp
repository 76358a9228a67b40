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

#ifndef ASPCORE_ANALYSIS_HPP
#define ASPCORE_ANALYSIS_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aspcore/syntax.hpp"

namespace aspcore {

// ---- safety ---------------------------------------------------------------

struct UnboundVariable {
  enum class Scope { Global, Local };

  std::string name;
  Scope scope = Scope::Global;
  std::string reason;  // human-readable explanation
};

struct SafetyReport {
  bool safe = true;
  std::vector<UnboundVariable> unbound;
};

// Variables bound by `literals` starting from `initially_bound`: a variable is
// bound when it occurs outside arithmetic terms in a positive classical atom,
// on one side of an equality whose other side is bound, or as the guard of
// `#aggr{...} = u` whose global element variables are bound.
std::set<std::string> bound_variables(const std::vector<Literal>& literals,
                                      const std::set<std::string>& initially_bound = {});

// Variables of the statement outside aggregate elements.
std::set<std::string> global_variables(const Rule& rule);
std::set<std::string> global_variables(const WeakConstraint& weak);

// Expects a desugared statement (no anonymous variables, no choice heads).
SafetyReport check_safety(const Rule& rule);
SafetyReport check_safety(const WeakConstraint& weak);
SafetyReport check_safety(const Query& query);

// ---- dependency graph -----------------------------------------------------

struct Signature {
  bool negated = false;
  std::string name;
  std::size_t arity = 0;

  static Signature of(const ClassicalAtom& atom) { return {atom.negated, atom.predicate, atom.arity()}; }
  // "p/2" or "-p/2".
  std::string str() const;

  auto operator<=>(const Signature&) const = default;
};

class DependencyGraph {
 public:
  void add_vertex(const Signature& v) { vertices_.insert(v); }
  void add_edge(const Signature& from, const Signature& to);

  const std::set<Signature>& vertices() const { return vertices_; }
  const std::set<std::pair<Signature, Signature>>& edges() const { return edges_; }

  // Whether `to` is reachable from `from` along at least one edge.
  bool reaches(const Signature& from, const Signature& to) const;
  // A shortest witnessing path (vertices, from first to last) or empty.
  std::vector<Signature> path(const Signature& from, const Signature& to) const;

 private:
  std::set<Signature> vertices_;
  std::set<std::pair<Signature, Signature>> edges_;
  std::map<Signature, std::set<Signature>> successors_;
};

DependencyGraph build_dependency_graph(const Program& program);

// `edge <from> <to>` lines, sorted.
std::string dump_graph(const DependencyGraph& graph);

struct RecursionViolation {
  Signature from;  // atom inside an aggregate element
  Signature to;    // head atom of the same rule
  std::vector<Signature> path;
  Origin origin;
};

std::vector<RecursionViolation> check_aggregates_nonrecursive(const Program& program, const DependencyGraph& graph);

// ---- lints ----------------------------------------------------------------

struct Warning {
  Origin origin;
  std::string message;
};

// One warning per predicate name used with more than one arity. Strong
// negation is ignored.
std::vector<Warning> check_arities(const Program& program);

// One warning per division whose divisor is not a non-zero integer constant.
std::vector<Warning> lint_undefined_arithmetic(const Program& program);

}  // namespace aspcore

#endif  // ASPCORE_ANALYSIS_HPP
