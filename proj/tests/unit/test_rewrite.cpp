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

#include "aspcore/lexer.hpp"
#include "aspcore/rewrite.hpp"
#include "aspcore/solve.hpp"

using namespace aspcore;

namespace {

std::string core(std::string_view text) { return pretty_print(desugar(parse_text(text))); }

std::string normalized(std::string_view text) { return pretty_print(normalize_guards(parse_text(text))); }

std::vector<std::string> solve_text(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& s : answer_sets(ground_program(desugar(parse_text(text))))) out.push_back(s.str());
  return out;
}

}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("anonymous variables become distinct fresh variables") {
    CHECK(pretty_print(name_anonymous_variables(parse_text("p :- q(_, _)."))) == "p :- q(V1,V2).\n");
    CHECK(pretty_print(name_anonymous_variables(parse_text("p :- q(X)."))) == "p :- q(X).\n");
    CHECK(pretty_print(name_anonymous_variables(parse_text("p(V1) :- q(V1, _, _)."))) == "p(V1) :- q(V1,V2,V3).\n");
    // Fresh names are per statement.
    CHECK(pretty_print(name_anonymous_variables(parse_text("p :- q(_). r :- s(_)."))) ==
          "p :- q(V1).\nr :- s(V1).\n");
  }

  TEST_CASE("left guards flip through the inverse relation") {
    CHECK(normalized("2 <= {a} :- b.") == "{a} >= 2 :- b.\n");
    CHECK(normalized("h :- 1 < #count{X : q(X)}.") == "h :- #count{X : q(X)} > 1.\n");
    CHECK(normalized("h :- 1 = #sum{X : q(X)}.") == "h :- #sum{X : q(X)} = 1.\n");
    CHECK(normalized("h :- 1 != #min{X : q(X)}.") == "h :- #min{X : q(X)} != 1.\n");
    CHECK(normalized("h :- 1 >= #max{X : q(X)}.") == "h :- #max{X : q(X)} <= 1.\n");
    CHECK(normalized("h :- #count{} = 0.") == "h :- #count{} = 0.\n");
  }

  TEST_CASE("two-bound expansions") {
    // positive aggregate in a rule body: one rule, two literals
    CHECK(normalized("h :- 1 < #count{X : q(X)} < 3.") == "h :- #count{X : q(X)} > 1, #count{X : q(X)} < 3.\n");
    // naf aggregate in a rule body: two rules
    CHECK(normalized("h :- not 1 < #count{X : q(X)} < 3.") ==
          "h :- not #count{X : q(X)} > 1.\nh :- not #count{X : q(X)} < 3.\n");
    // positive aggregate in a weak constraint: one weak constraint
    CHECK(normalized(":~ 1 < #count{X : q(X)} < 3. [1]") ==
          ":~ #count{X : q(X)} > 1, #count{X : q(X)} < 3. [1@0]\n");
    // naf aggregate in a weak constraint: two weak constraints
    CHECK(normalized(":~ not 1 < #count{X : q(X)} < 3. [1]") ==
          ":~ not #count{X : q(X)} > 1. [1@0]\n:~ not #count{X : q(X)} < 3. [1@0]\n");
    // choice head: two rules
    CHECK(normalized("1 <= {a; b} <= 2 :- c.") == "{a; b} >= 1 :- c.\n{a; b} <= 2 :- c.\n");
  }

  TEST_CASE("choice rule mapping on the reference example") {
    const auto text = core("{p(a):q(2); -p(a):q(3)} <= 1 :- q(1).");
    CHECK(text ==
          "p(a) | __aux_p_1(1,a) :- q(1), q(2).\n"
          "-p(a) | __aux_p_1(0,a) :- q(1), q(3).\n"
          ":- q(1), not #count{__aux_p_1(1,a) : p(a), q(2); __aux_p_1(0,a) : -p(a), q(3)} <= 1.\n");
  }

  TEST_CASE("guard-free choice gets >= 0") {
    CHECK(core("{a}.") == "a | __aux_a_1(1).\n:- not #count{__aux_a_1(1) : a} >= 0.\n");
    CHECK(solve_text("{a}.") == std::vector<std::string>{"{}", "{a}"});
  }

  TEST_CASE("empty choice yields only the constraint") {
    CHECK(core("{} <= 0.") == ":- not #count{} <= 0.\n");
    CHECK(solve_text("{} <= 0.") == std::vector<std::string>{"{}"});
    CHECK(solve_text("{} >= 1.").empty());
  }

  TEST_CASE("one auxiliary name per predicate, clear of the program's names") {
    ParseOptions opts;
    opts.core = true;
    const auto text = pretty_print(desugar(parse_text("{p(1); p(2); q}. __aux_p_1 :- p(1).", opts)));
    CHECK(text.find("__aux_p_1(") == std::string::npos);
    CHECK(text.find("p(1) | __aux_p_2(1,1).") != std::string::npos);
    CHECK(text.find("p(2) | __aux_p_2(1,2).") != std::string::npos);
    CHECK(text.find("q | __aux_q_3(1).") != std::string::npos);
  }

  TEST_CASE("generated names are fresh against the token stream") {
    const std::string input = "{p(X) : d(X)} :- e. aux_p_1. d(1). e.";
    const auto text = core(input);
    for (const auto& t : tokenize(input)) {
      if (t.kind == TokenKind::Id) CHECK_FALSE(is_auxiliary_name(t.text));
    }
    CHECK(text.find("__aux_p_1") != std::string::npos);
  }

  TEST_CASE("desugared programs are in core form") {
    const auto p = desugar(parse_text("2 <= {a(X) : b(X), not c(_)} <= 3 :- d(_). h :- 1 < #sum{X : b(X)}."));
    for (const auto& r : p.rules) {
      CHECK(r.disjunction() != nullptr);
      std::set<std::string> vars;
      for (const auto& l : r.body) {
        collect_variables(l, vars);
        if (const auto* g = l.aggregate()) {
          CHECK_FALSE(g->left.has_value());
          CHECK(g->right.has_value());
        }
      }
      for (const auto& v : vars) CHECK(v != "_");
    }
  }

  TEST_CASE("desugar is idempotent") {
    for (const char* text : {"{p(a):q(2); -p(a):q(3)} <= 1 :- q(1).", "1 < {a; b} < 3.", "h :- q(_), not 1 < #count{X : r(X)} < 3.",
                             ":~ not 1 < #count{X : q(X)} < 3. [1]"}) {
      CAPTURE(text);
      const auto once = desugar(parse_text(text));
      CHECK(desugar(once) == once);
    }
  }

  TEST_CASE("core text re-parses in core mode only") {
    const auto text = core("{a; b}.");
    ParseOptions opts;
    opts.core = true;
    CHECK(parse_text(text, opts) == desugar(parse_text("{a; b}.")));
    CHECK_THROWS_AS(parse_text(text), ParseError);
  }

  TEST_CASE("choice semantics: at most one") {
    CHECK(solve_text("{p(a):q(2); -p(a):q(3)} <= 1 :- q(1). q(1). q(2). q(3).") ==
          std::vector<std::string>{"{p(a), q(1), q(2), q(3)}", "{-p(a), q(1), q(2), q(3)}", "{q(1), q(2), q(3)}"});
    CHECK(solve_text("1 <= {a; b} <= 1.") == std::vector<std::string>{"{a}", "{b}"});
    CHECK(solve_text("{a; b} = 2.") == std::vector<std::string>{"{a, b}"});
  }
}
