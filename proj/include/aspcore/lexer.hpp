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

#ifndef ASPCORE_LEXER_HPP
#define ASPCORE_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "aspcore/diagnostics.hpp"

namespace aspcore {

enum class TokenKind {
  Id,
  Variable,
  String,
  Number,
  AnonymousVariable,
  Dot,
  Comma,
  QueryMark,
  Colon,
  Semicolon,
  Or,
  Naf,
  Cons,
  Wcons,
  Plus,
  Minus,
  Times,
  Div,
  At,
  ParenOpen,
  ParenClose,
  SquareOpen,
  SquareClose,
  CurlyOpen,
  CurlyClose,
  Equal,
  Unequal,
  Less,
  Greater,
  LessOrEq,
  GreaterOrEq,
  AggregateCount,
  AggregateMax,
  AggregateMin,
  AggregateSum,
  // Trivia; only produced when LexOptions::keep_trivia is set.
  Comment,
  MultiLineComment,
  Blank,
  EndOfInput,
};

// Upper-case table name, e.g. "CONS", "AGGREGATE_COUNT".
std::string_view token_kind_name(TokenKind kind);

bool is_trivia(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::EndOfInput;
  std::string text;
  SourceSpan span;

  bool operator==(const Token&) const = default;
};

// Names starting with this prefix are generated by the rewriter. The standard
// lexical classes can never produce them, so user programs cannot clash.
inline constexpr std::string_view kReservedPrefix = "__aux_";

struct LexOptions {
  // Emit COMMENT, MULTI_LINE_COMMENT and BLANK tokens instead of skipping them.
  bool keep_trivia = false;
  // Accept identifiers with the reserved prefix (reading tool-generated core programs).
  bool allow_reserved = false;
};

// Longest-match tokenization of ASP-Core-2 source text. The result always ends
// with an EndOfInput token. Throws LexError on the first unmatched input.
std::vector<Token> tokenize(std::string_view text, const LexOptions& options = {});

}  // namespace aspcore

#endif  // ASPCORE_LEXER_HPP
