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


#include <doctest.h>

#include <algorithm>
#include <random>

#include "aspcore/analysis.hpp"
#include "aspcore/rewrite.hpp"

using namespace aspcore;

namespace {

Rule rule(std::string_view text) { return desugar(parse_text(text)).rules.at(0); }

std::vector<std::string> unbound(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& u : check_safety(rule(text)).unbound) out.push_back(u.name);
  return out;
}

std::vector<std::string> edges(std::string_view text) {
  std::vector<std::string> out;
  const auto graph = build_dependency_graph(desugar(parse_text(text)));
  for (const auto& [from, to] : graph.edges()) {
    out.push_back(from.str() + " " + to.str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool recursive(std::string_view text) {
  const auto p = desugar(parse_text(text));
  return !check_aggregates_nonrecursive(p, build_dependency_graph(p)).empty();
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("safety: sum examples") {
    CHECK(check_safety(rule("p(X,Y) :- q(X), #sum{S,X : r(T,X), S=(2*T)-X} = Y.")).safe);
    const auto report = check_safety(rule("p(X,Y) :- q(X), #sum{S,X : r(T,X), S+X=2*T} = Y."));
    CHECK_FALSE(report.safe);
    REQUIRE(report.unbound.size() == 1);
    CHECK(report.unbound[0].name == "S");
    CHECK(report.unbound[0].scope == UnboundVariable::Scope::Local);
  }

  TEST_CASE("safety: global variables") {
    CHECK(unbound("p(X).") == std::vector<std::string>{"X"});
    CHECK(unbound("p :- q(X+1).") == std::vector<std::string>{"X"});
    CHECK(unbound("p(X) :- not q(X).") == std::vector<std::string>{"X"});
    CHECK(unbound("p(X) :- X < 3.") == std::vector<std::string>{"X"});
    CHECK(unbound("p(X) :- q(Y), X = Y+1.").empty());
    CHECK(unbound("p(X) :- q(Y), Y+1 = X.").empty());
    CHECK(unbound("p(X) :- X = Y, Y = 2.").empty());
    CHECK(unbound("p(X) :- X+1 = 2.") == std::vector<std::string>{"X"});
    CHECK(unbound("p(X) :- #count{Y : q(Y)} = X.").empty());
    CHECK(unbound("p(X) :- #count{Y : q(Y)} < X.") == std::vector<std::string>{"X"});
    CHECK(unbound("p(X) :- not #count{Y : q(Y)} = X.") == std::vector<std::string>{"X"});
    CHECK(unbound("p(X) :- #count{Y : q(Y,Z)} = X, r(Z).").empty());
    CHECK(unbound("p(X) :- #count{Y : q(Y,X)} = X.") == std::vector<std::string>{"X"});
  }

  TEST_CASE("safety: local variables") {
    CHECK(unbound("p :- #count{Y : q(Z)} > 1.") == std::vector<std::string>{"Y"});
    CHECK(unbound("p :- #count{Y : not q(Y)} > 1.") == std::vector<std::string>{"Y"});
    CHECK(unbound("p :- r(X), #count{Y : q(X), Y = X*2} > 1.").empty());
  }

  TEST_CASE("safety: weak constraints and queries") {
    CHECK(check_safety(desugar(parse_text(":~ p(X). [X@1]")).weaks[0]).safe);
    CHECK_FALSE(check_safety(desugar(parse_text(":~ p(X). [Y@1]")).weaks[0]).safe);
    CHECK(check_safety(*parse_text("p(X,_)?").query).safe);
    CHECK(check_safety(*parse_text("p(X+1)?").query).unbound.size() == 1);
  }

  TEST_CASE("safety: desugared choice rules stay safe") {
    for (const auto& r : desugar(parse_text("{p(X) : d(X), not q(X)} <= 1 :- e(Y), Y > 1.")).rules) {
      CAPTURE(to_string(r));
      CHECK(check_safety(r).safe);
    }
  }

  TEST_CASE("safety monotonicity under added positive atoms") {
    std::mt19937 rng(11);
    const std::vector<std::string> bodies = {"q(X)", "not r(Y)", "X = Y+1", "Y < Z", "s(Z)", "#count{W : t(W,Y)} = Z",
                                             "X+Y = Z"};
    for (int i = 0; i < 200; ++i) {
      std::string body;
      for (int k = 0; k < 3; ++k) body += (k ? ", " : "") + bodies[rng() % bodies.size()];
      const auto base = rule("p(X,Y,Z) :- " + body + ".");
      for (const char* v : {"X", "Y", "Z"}) {
        const auto grown = rule("p(X,Y,Z) :- " + body + ", u(" + v + ").");
        if (check_safety(base).safe) CHECK(check_safety(grown).safe);
      }
    }
  }

  TEST_CASE("dependency graph edges") {
    CHECK(edges("a :- b.") == std::vector<std::string>{"a/0 a/0", "a/0 b/0"});
    CHECK(edges("a | b :- c.") ==
          std::vector<std::string>{"a/0 a/0", "a/0 b/0", "a/0 c/0", "b/0 a/0", "b/0 b/0", "b/0 c/0"});
    CHECK(edges("").empty());
    CHECK(edges("-a(1) :- not b, #count{X : c(X)} > 1.") ==
          std::vector<std::string>{"-a/1 -a/1", "-a/1 b/0", "-a/1 c/1"});
    CHECK(dump_graph(build_dependency_graph(desugar(parse_text("a :- b.")))) == "edge a/0 a/0\nedge a/0 b/0\n");
  }

  TEST_CASE("aggregate recursion") {
    CHECK(recursive("p(X) :- #count{Y : p(Y)} = X, d(X)."));
    CHECK_FALSE(recursive("p :- #count{Y : q(Y)} = 1."));
    CHECK(recursive("a :- #count{ : b} = 1. b :- a."));
    CHECK_FALSE(recursive("a :- #count{ : b} = 1. c :- a."));
    CHECK(recursive("a :- #count{ : b} = 1. b :- not a."));
    CHECK(recursive("a | c :- #count{ : c} = 1."));
  }

  TEST_CASE("reachability matches a transitive closure") {
    std::mt19937 rng(5);
    for (int round = 0; round < 100; ++round) {
      const int n = 2 + static_cast<int>(rng() % 19);
      DependencyGraph g;
      std::vector<Signature> v;
      for (int i = 0; i < n; ++i) {
        v.push_back({false, "v" + std::to_string(i), 0});
        g.add_vertex(v.back());
      }
      std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
      const int m = static_cast<int>(rng() % (2 * n));
      for (int k = 0; k < m; ++k) {
        const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        g.add_edge(v[a], v[b]);
        reach[a][b] = true;
      }
      for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (reach[i][k] && reach[k][j]) reach[i][j] = true;
          }
        }
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          CHECK(g.reaches(v[i], v[j]) == reach[i][j]);
          const auto path = g.path(v[i], v[j]);
          CHECK(path.empty() == !reach[i][j]);
          if (!path.empty()) {
            CHECK(path.front() == v[i]);
            CHECK(path.back() == v[j]);
          }
        }
      }
    }
  }

  TEST_CASE("arity warnings") {
    CHECK(check_arities(parse_text("p(1). p(1,2).")).size() == 1);
    CHECK(check_arities(parse_text("p(1). q(1).")).empty());
    CHECK(check_arities(parse_text("p. -p(1).")).size() == 1);
    CHECK(check_arities(parse_text("p. -p.")).empty());
    CHECK(check_arities(parse_text("p(1). q :- #count{X : p(X,X)} > 0.")).size() == 1);
  }

  TEST_CASE("undefined arithmetic lint") {
    CHECK(lint_undefined_arithmetic(parse_text("p :- a(X), not q(X/X).")).size() == 1);
    const auto guarded = lint_undefined_arithmetic(parse_text("p :- a(X), not q(X/X), X != 0."));
    REQUIRE(guarded.size() == 1);
    CHECK(guarded[0].message.find("X != 0") != std::string::npos);
    CHECK(lint_undefined_arithmetic(parse_text("p(X/2) :- a(X).")).empty());
    CHECK(lint_undefined_arithmetic(parse_text("p(X/0) :- a(X).")).size() == 1);
    CHECK(lint_undefined_arithmetic(parse_text("p(X/(1+1)) :- a(X).")).size() == 1);
  }
}
