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

#include <sstream>

#include "aspcore/cli.hpp"

using namespace aspcore;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  auto parsed = parse_command_line(args, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return {*code, out.str(), err.str()};
  std::istringstream in(input);
  const int code = run(std::get<RunConfig>(parsed), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse prints the canonical form") {
    const auto r = invoke({"parse"}, "a:-b.  c|d.");
    CHECK(r.code == 0);
    CHECK(r.out == "a :- b.\nc | d.\n");
    CHECK(invoke({"parse"}, "").out.empty());
  }

  TEST_CASE("dump tokens") {
    const auto r = invoke({"parse", "--dump-tokens"}, "a :- \"x\".");
    CHECK(r.code == 0);
    CHECK(r.out == "ID \"a\" 1:1\nCONS \":-\" 1:3\nSTRING \"\\\"x\\\"\" 1:6\nDOT \".\" 1:9\n");
  }

  TEST_CASE("ast dump is json") {
    const auto r = invoke({"parse", "--ast"}, "a.");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"rules\"") != std::string::npos);
  }

  TEST_CASE("diagnostics name stdin and position") {
    const auto r = invoke({"parse"}, "a :- b\n");
    CHECK(r.code == 2);
    CHECK(r.err.rfind("<stdin>:2:1: error: ", 0) == 0);
  }

  TEST_CASE("restriction violations exit 3") {
    const auto unsafe = invoke({"check"}, "p(X,Y) :- q(X), #sum{S,X : r(T,X), S+X=2*T} = Y.");
    CHECK(unsafe.code == 3);
    CHECK(unsafe.err.find("variable S") != std::string::npos);
    CHECK(invoke({"solve"}, "p(X) :- #count{Y : p(Y)} = X, d(X).").code == 3);
  }

  TEST_CASE("bounds exit 4") {
    CHECK(invoke({"solve", "--max-int", "5"}, "p(X+1) :- p(X). p(0).").code == 4);
    CHECK(invoke({"ground", "--max-nesting", "2"}, "p(f(X)) :- p(X). p(0).").code == 4);
    std::string many;
    for (int i = 0; i < 26; ++i) many += "a" + std::to_string(i) + " | b" + std::to_string(i) + ".\n";
    CHECK(invoke({"solve"}, many).code == 4);
    CHECK(invoke({"solve", "--search", "--models", "1"}, many).code == 0);
    CHECK(invoke({"solve", "--brute-force-limit", "60", "--models", "1"}, "a | b. c | d.").code == 0);
  }

  TEST_CASE("solve output and exit codes") {
    CHECK(invoke({"solve"}, "a | b.").out == "{a}\n{b}\n");
    CHECK(invoke({"solve", "--models", "1"}, "a | b.").out == "{a}\n");
    const auto none = invoke({"solve"}, "p :- not p.");
    CHECK(none.code == 1);
    CHECK(none.out.empty());
    CHECK(invoke({"solve"}, "-p(1). q.").out == "{q, -p(1)}\n");
  }

  TEST_CASE("optimal costs from highest level") {
    const auto r = invoke({"solve", "--opt"}, "a | b. :~ a. [9@1] :~ b. [1@2]");
    CHECK(r.code == 0);
    CHECK(r.out == "{a}\nCOSTS 2=0 1=9\n");
    CHECK(invoke({"solve", "--opt"}, "a | b.").out == "{a}\n{b}\n");
  }

  TEST_CASE("query output") {
    CHECK(invoke({"query"}, "a. b | c. a?").out == "TRUE\n");
    CHECK(invoke({"query"}, "a. b | c. b?").out == "FALSE\n");
    CHECK(invoke({"query"}, "p(1,a). p(2,b). p(X,Y)?").out == "X=1 Y=a\nX=2 Y=b\n");
    const auto inc = invoke({"query"}, "a. :- a. p(X)?");
    CHECK(inc.out == "INCONSISTENT\n");
    CHECK(inc.code == 1);
    CHECK(invoke({"query"}, "a.").code == 2);
  }

  TEST_CASE("flags") {
    CHECK(invoke({"--version"}).out == "ASP-Core-2\n");
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({}).code == 64);
    CHECK(invoke({"solve", "--models", "x"}).code == 64);
    CHECK(invoke({"ground", "--max-int", "-1"}).code == 64);
    CHECK(invoke({"frob"}).code == 64);
    CHECK(invoke({"solve", "/nonexistent/file.lp"}).code == 66);
  }

  TEST_CASE("ground output re-fed to solve gives the same answer sets") {
    const std::string program = "d(1). d(2). {p(X) : d(X)} <= 1. q(X) :- d(X), not p(X). s :- #count{X : q(X)} = 2.";
    const auto grounded = invoke({"ground"}, program);
    REQUIRE(grounded.code == 0);
    CHECK(invoke({"solve", "--core"}, grounded.out).out == invoke({"solve"}, program).out);
  }

  TEST_CASE("identical runs produce identical bytes") {
    const std::string program = "a | b. c :- a. :~ c. [1@1] {d; e}.";
    CHECK(invoke({"solve", "--opt"}, program).out == invoke({"solve", "--opt"}, program).out);
    CHECK(invoke({"check", "--dump-core", "--dump-graph"}, program).out ==
          invoke({"check", "--dump-core", "--dump-graph"}, program).out);
  }

  TEST_CASE("warnings do not change the exit code") {
    const auto r = invoke({"check"}, "p(1). p(1,2). q :- a(X), not r(X/X).");
    CHECK(r.code == 0);
    CHECK(r.err.find("warning: predicate name 'p'") != std::string::npos);
    CHECK(r.err.find("warning: division X/X") != std::string::npos);
  }
}
