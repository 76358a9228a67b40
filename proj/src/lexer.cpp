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

#include "aspcore/lexer.hpp"

#include <array>
#include <utility>

namespace aspcore {

namespace {

constexpr std::array<std::pair<TokenKind, std::string_view>, 39> kKindNames{{
    {TokenKind::Id, "ID"},
    {TokenKind::Variable, "VARIABLE"},
    {TokenKind::String, "STRING"},
    {TokenKind::Number, "NUMBER"},
    {TokenKind::AnonymousVariable, "ANONYMOUS_VARIABLE"},
    {TokenKind::Dot, "DOT"},
    {TokenKind::Comma, "COMMA"},
    {TokenKind::QueryMark, "QUERY_MARK"},
    {TokenKind::Colon, "COLON"},
    {TokenKind::Semicolon, "SEMICOLON"},
    {TokenKind::Or, "OR"},
    {TokenKind::Naf, "NAF"},
    {TokenKind::Cons, "CONS"},
    {TokenKind::Wcons, "WCONS"},
    {TokenKind::Plus, "PLUS"},
    {TokenKind::Minus, "MINUS"},
    {TokenKind::Times, "TIMES"},
    {TokenKind::Div, "DIV"},
    {TokenKind::At, "AT"},
    {TokenKind::ParenOpen, "PAREN_OPEN"},
    {TokenKind::ParenClose, "PAREN_CLOSE"},
    {TokenKind::SquareOpen, "SQUARE_OPEN"},
    {TokenKind::SquareClose, "SQUARE_CLOSE"},
    {TokenKind::CurlyOpen, "CURLY_OPEN"},
    {TokenKind::CurlyClose, "CURLY_CLOSE"},
    {TokenKind::Equal, "EQUAL"},
    {TokenKind::Unequal, "UNEQUAL"},
    {TokenKind::Less, "LESS"},
    {TokenKind::Greater, "GREATER"},
    {TokenKind::LessOrEq, "LESS_OR_EQ"},
    {TokenKind::GreaterOrEq, "GREATER_OR_EQ"},
    {TokenKind::AggregateCount, "AGGREGATE_COUNT"},
    {TokenKind::AggregateMax, "AGGREGATE_MAX"},
    {TokenKind::AggregateMin, "AGGREGATE_MIN"},
    {TokenKind::AggregateSum, "AGGREGATE_SUM"},
    {TokenKind::Comment, "COMMENT"},
    {TokenKind::MultiLineComment, "MULTI_LINE_COMMENT"},
    {TokenKind::Blank, "BLANK"},
    {TokenKind::EndOfInput, "END_OF_INPUT"},
}};

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_lower(c) || is_upper(c) || is_digit(c) || c == '_'; }

class Scanner {
 public:
  Scanner(std::string_view text, const LexOptions& options) : text_(text), options_(options) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (pos_ < text_.size()) {
      Token token = next();
      if (!is_trivia(token.kind) || options_.keep_trivia) {
        tokens.push_back(std::move(token));
      }
    }
    tokens.push_back(Token{TokenKind::EndOfInput, "", SourceSpan{pos_, 0, line_, column_}});
    return tokens;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  bool has(std::size_t ahead) const { return pos_ + ahead < text_.size(); }

  [[noreturn]] void fail(std::size_t length, const std::string& message) const {
    throw LexError(SourceSpan{pos_, length, line_, column_}, message);
  }

  // Consumes `length` bytes starting at the current position as one token.
  Token make(TokenKind kind, std::size_t length) {
    Token token{kind, std::string(text_.substr(pos_, length)), SourceSpan{pos_, length, line_, column_}};
    for (std::size_t i = 0; i < length; ++i) {
      if (text_[pos_ + i] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
    pos_ += length;
    return token;
  }

  std::size_t ident_length(std::size_t start) const {
    std::size_t n = start;
    while (has(n) && is_ident_char(peek(n))) ++n;
    return n;
  }

  Token next() {
    const char c = peek();
    if (c == ' ' || c == '\t' || c == '\n') {
      std::size_t n = 1;
      while (has(n) && (peek(n) == ' ' || peek(n) == '\t' || peek(n) == '\n')) ++n;
      return make(TokenKind::Blank, n);
    }
    if (c == '%') return comment();
    if (c == '"') return string_literal();
    if (is_digit(c)) {
      if (c == '0') return make(TokenKind::Number, 1);
      std::size_t n = 1;
      while (has(n) && is_digit(peek(n))) ++n;
      return make(TokenKind::Number, n);
    }
    if (is_lower(c)) {
      const std::size_t n = ident_length(1);
      if (text_.substr(pos_, n) == "not") return make(TokenKind::Naf, n);
      return make(TokenKind::Id, n);
    }
    if (is_upper(c)) return make(TokenKind::Variable, ident_length(1));
    if (c == '_') {
      if (options_.allow_reserved && text_.substr(pos_).starts_with(kReservedPrefix)) {
        return make(TokenKind::Id, ident_length(kReservedPrefix.size()));
      }
      return make(TokenKind::AnonymousVariable, 1);
    }
    if (c == '#') return aggregate_keyword();
    switch (c) {
      case '.': return make(TokenKind::Dot, 1);
      case ',': return make(TokenKind::Comma, 1);
      case '?': return make(TokenKind::QueryMark, 1);
      case ';': return make(TokenKind::Semicolon, 1);
      case '|': return make(TokenKind::Or, 1);
      case '+': return make(TokenKind::Plus, 1);
      case '-': return make(TokenKind::Minus, 1);
      case '*': return make(TokenKind::Times, 1);
      case '/': return make(TokenKind::Div, 1);
      case '@': return make(TokenKind::At, 1);
      case '(': return make(TokenKind::ParenOpen, 1);
      case ')': return make(TokenKind::ParenClose, 1);
      case '[': return make(TokenKind::SquareOpen, 1);
      case ']': return make(TokenKind::SquareClose, 1);
      case '{': return make(TokenKind::CurlyOpen, 1);
      case '}': return make(TokenKind::CurlyClose, 1);
      case '=': return make(TokenKind::Equal, 1);
      case ':':
        if (peek(1) == '-') return make(TokenKind::Cons, 2);
        if (peek(1) == '~') return make(TokenKind::Wcons, 2);
        return make(TokenKind::Colon, 1);
      case '<':
        if (peek(1) == '>') return make(TokenKind::Unequal, 2);
        if (peek(1) == '=') return make(TokenKind::LessOrEq, 2);
        return make(TokenKind::Less, 1);
      case '>':
        if (peek(1) == '=') return make(TokenKind::GreaterOrEq, 2);
        return make(TokenKind::Greater, 1);
      case '!':
        if (peek(1) == '=') return make(TokenKind::Unequal, 2);
        break;
      default:
        break;
    }
    if (static_cast<unsigned char>(c) >= 0x80) {
      fail(1, "non-ASCII byte outside of a string or comment");
    }
    fail(1, std::string("unexpected character '") + c + "'");
  }

  Token aggregate_keyword() {
    static constexpr std::array<std::pair<std::string_view, TokenKind>, 4> kKeywords{{
        {"#count", TokenKind::AggregateCount},
        {"#max", TokenKind::AggregateMax},
        {"#min", TokenKind::AggregateMin},
        {"#sum", TokenKind::AggregateSum},
    }};
    for (const auto& [keyword, kind] : kKeywords) {
      if (text_.substr(pos_).starts_with(keyword)) return make(kind, keyword.size());
    }
    fail(ident_length(1), "unknown directive; expected #count, #max, #min or #sum");
  }

  // "%*"([^*]|\*[^%])*"*%" wins over "%"([^*\n][^\n]*)?\n on a shared "%*" prefix.
  Token comment() {
    if (peek(1) == '*') {
      bool after_star = false;
      for (std::size_t n = 2; has(n); ++n) {
        const char c = peek(n);
        if (after_star) {
          if (c == '%') return make(TokenKind::MultiLineComment, n + 1);
          after_star = false;  // "\*[^%]" consumed the star and this byte
        } else if (c == '*') {
          after_star = true;
        }
      }
      fail(2, "unterminated multi-line comment");
    }
    std::size_t n = 1;
    while (has(n) && peek(n) != '\n') ++n;
    // A trailing comment at end of input is accepted without its newline.
    return make(TokenKind::Comment, has(n) ? n + 1 : n);
  }

  // \"([^\"]|\\\")*\" with longest match: a quote preceded by a backslash may
  // either close the string or be part of the content.
  Token string_literal() {
    std::size_t end = 0;
    for (std::size_t n = 1; has(n); ++n) {
      if (peek(n) != '"') continue;
      end = n + 1;
      if (peek(n - 1) != '\\') break;
    }
    if (end == 0) fail(1, "unterminated string constant");
    return make(TokenKind::String, end);
  }

  std::string_view text_;
  LexOptions options_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "UNKNOWN";
}

bool is_trivia(TokenKind kind) {
  return kind == TokenKind::Comment || kind == TokenKind::MultiLineComment || kind == TokenKind::Blank;
}

std::vector<Token> tokenize(std::string_view text, const LexOptions& options) {
  return Scanner(text, options).run();
}

}  // namespace aspcore
