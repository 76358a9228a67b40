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

#include <string>
#include <vector>

#include "aspcore/lexer.hpp"

using namespace aspcore;

namespace {

std::vector<TokenKind> kinds(std::string_view text) {
  std::vector<TokenKind> out;
  for (const auto& t : tokenize(text)) {
    if (t.kind != TokenKind::EndOfInput) out.push_back(t.kind);
  }
  return out;
}

std::vector<std::string> texts(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(text)) {
    if (t.kind != TokenKind::EndOfInput) out.push_back(t.text);
  }
  return out;
}

using K = TokenKind;

}  // namespace

TEST_SUITE("lexer") {
  TEST_CASE("every table row") {
    struct Row {
      std::string_view text;
      TokenKind kind;
    };
    const std::vector<Row> rows = {
        {"anna", K::Id},           {"a_B9", K::Id},          {"Name", K::Variable},       {"X_1", K::Variable},
        {"\"Peter\"", K::String},  {"\"\"", K::String},      {"0", K::Number},            {"100000", K::Number},
        {"_", K::AnonymousVariable}, {".", K::Dot},          {",", K::Comma},             {"?", K::QueryMark},
        {":", K::Colon},           {";", K::Semicolon},      {"|", K::Or},                {"not", K::Naf},
        {":-", K::Cons},           {":~", K::Wcons},         {"+", K::Plus},              {"-", K::Minus},
        {"*", K::Times},           {"/", K::Div},            {"@", K::At},                {"(", K::ParenOpen},
        {")", K::ParenClose},      {"[", K::SquareOpen},     {"]", K::SquareClose},       {"{", K::CurlyOpen},
        {"}", K::CurlyClose},      {"=", K::Equal},          {"<>", K::Unequal},          {"!=", K::Unequal},
        {"<", K::Less},            {">", K::Greater},        {"<=", K::LessOrEq},         {">=", K::GreaterOrEq},
        {"#count", K::AggregateCount}, {"#max", K::AggregateMax}, {"#min", K::AggregateMin}, {"#sum", K::AggregateSum},
    };
    for (const auto& row : rows) {
      CAPTURE(row.text);
      const auto tokens = tokenize(row.text);
      REQUIRE(tokens.size() == 2);
      CHECK(tokens[0].kind == row.kind);
      CHECK(tokens[0].text == row.text);
    }
  }

  TEST_CASE("trivia rows are skipped") {
    CHECK(kinds("a :- b. % c") == std::vector{K::Id, K::Cons, K::Id, K::Dot});
    CHECK(kinds("a %* multi\nline *% b") == std::vector{K::Id, K::Id});
    CHECK(kinds(" \t\n") .empty());
    CHECK(kinds("%\na") == std::vector{K::Id});
  }

  TEST_CASE("keyword boundary by longest match") {
    CHECK(kinds("not") == std::vector{K::Naf});
    CHECK(kinds("nota") == std::vector{K::Id});
    CHECK(kinds("not_") == std::vector{K::Id});
    CHECK(kinds("not a") == std::vector{K::Naf, K::Id});
    CHECK(kinds("Not") == std::vector{K::Variable});
  }

  TEST_CASE("numbers carry no sign and no leading zeros") {
    CHECK(texts("-3") == std::vector<std::string>{"-", "3"});
    CHECK(texts("007") == std::vector<std::string>{"0", "0", "7"});
    CHECK(texts("10") == std::vector<std::string>{"10"});
  }

  TEST_CASE("string escapes are kept verbatim") {
    const auto tokens = tokenize(R"("say \"hi\"")");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].kind == K::String);
    CHECK(tokens[0].text == R"("say \"hi\"")");
    CHECK(texts(R"(p("a","b"))") == std::vector<std::string>{"p", "(", "\"a\"", ",", "\"b\"", ")"});
    CHECK(kinds("\"caf\xc3\xa9\"") == std::vector{K::String});
  }

  TEST_CASE("two-character operators prefer the longer match") {
    CHECK(kinds("<=") == std::vector{K::LessOrEq});
    CHECK(kinds("< =") == std::vector{K::Less, K::Equal});
    CHECK(kinds(":-:~:") == std::vector{K::Cons, K::Wcons, K::Colon});
    CHECK(kinds("<>=") == std::vector{K::Unequal, K::Equal});
  }

  TEST_CASE("multi-line comment wins over line comment on %*") {
    CHECK(kinds("%* a *% b") == std::vector{K::Id});
    CHECK(kinds("%**% b") == std::vector{K::Id});
    CHECK(kinds("%* a ** b *% c") == std::vector{K::Id});
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(tokenize("a & b"), LexError);
    CHECK_THROWS_AS(tokenize("\"open"), LexError);
    CHECK_THROWS_AS(tokenize("%* never closed"), LexError);
    CHECK_THROWS_AS(tokenize("#const"), LexError);
    CHECK_THROWS_AS(tokenize("!"), LexError);
    CHECK_THROWS_AS(tokenize("caf\xc3\xa9"), LexError);
    CHECK_THROWS_AS(tokenize("a.\r\n"), LexError);
    try {
      tokenize("a.\nb & c");
      FAIL("expected a LexError");
    } catch (const LexError& e) {
      CHECK(e.span().line == 2);
      CHECK(e.span().column == 3);
      CHECK(e.span().offset == 5);
    }
  }

  TEST_CASE("reserved prefix only in core mode") {
    CHECK(kinds("__aux_p_1") == std::vector{K::AnonymousVariable, K::AnonymousVariable, K::Id});
    LexOptions core;
    core.allow_reserved = true;
    const auto tokens = tokenize("__aux_p_1(1)", core);
    REQUIRE(tokens.size() == 5);
    CHECK(tokens[0].kind == K::Id);
    CHECK(tokens[0].text == "__aux_p_1");
  }

  TEST_CASE("spans track lines and columns") {
    const auto tokens = tokenize("a :-\n  b.");
    REQUIRE(tokens.size() == 5);
    CHECK(tokens[2].span.line == 2);
    CHECK(tokens[2].span.column == 3);
    CHECK(tokens[2].span.offset == 7);
    CHECK(tokens[4].kind == K::EndOfInput);
  }

  TEST_CASE("concatenated lexemes reproduce the input") {
    const std::string input = "p(X) :- q(X, \"s\\\"t\"), not r. %* c\n *% :~ s. [1@2, X]\n% tail";
    LexOptions keep;
    keep.keep_trivia = true;
    std::string joined;
    for (const auto& t : tokenize(input, keep)) joined += t.text;
    CHECK(joined == input);
  }

  TEST_CASE("tokenize is deterministic") {
    const std::string input = "a | b :- c, not d, #count{X : e(X)} > 2.";
    CHECK(tokenize(input) == tokenize(input));
  }

  TEST_CASE("kind names follow the table") {
    CHECK(token_kind_name(K::Wcons) == "WCONS");
    CHECK(token_kind_name(K::AnonymousVariable) == "ANONYMOUS_VARIABLE");
    CHECK(token_kind_name(K::GreaterOrEq) == "GREATER_OR_EQ");
  }
}
