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

// Recursive-descent parser for the ASP-Core-2 grammar. Left-recursive list
// productions are parsed iteratively; arithmetic follows the usual
// precedence (unary minus, then * and /, then + and -, left-associative).
// Where a classical literal and a term share a prefix (`p(X)` vs `p(X) < 3`)
// the parser backtracks over the token vector.

#include <algorithm>

#include "aspcore/syntax.hpp"

namespace aspcore {

namespace {

const std::vector<std::string> kRelationNames{"EQUAL", "UNEQUAL", "LESS", "GREATER", "LESS_OR_EQ", "GREATER_OR_EQ"};

std::optional<Relation> relation_of(TokenKind kind) {
  switch (kind) {
    case TokenKind::Equal: return Relation::Equal;
    case TokenKind::Unequal: return Relation::NotEqual;
    case TokenKind::Less: return Relation::Less;
    case TokenKind::Greater: return Relation::Greater;
    case TokenKind::LessOrEq: return Relation::LessOrEqual;
    case TokenKind::GreaterOrEq: return Relation::GreaterOrEqual;
    default: return std::nullopt;
  }
}

std::optional<AggregateFunction> aggregate_of(TokenKind kind) {
  switch (kind) {
    case TokenKind::AggregateCount: return AggregateFunction::Count;
    case TokenKind::AggregateSum: return AggregateFunction::Sum;
    case TokenKind::AggregateMax: return AggregateFunction::Max;
    case TokenKind::AggregateMin: return AggregateFunction::Min;
    default: return std::nullopt;
  }
}

bool is_arith_operator(TokenKind kind) {
  return kind == TokenKind::Plus || kind == TokenKind::Minus || kind == TokenKind::Times || kind == TokenKind::Div;
}

class Parser {
 public:
  Parser(std::span<const Token> tokens, const ParseOptions& options) : tokens_(tokens), options_(options) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::EndOfInput) {
      throw std::invalid_argument("token sequence must end with END_OF_INPUT");
    }
  }

  Program program() {
    Program program;
    while (!at(TokenKind::EndOfInput)) {
      if (program.query) {
        fail("a program has at most one query and it must be the last statement", {"END_OF_INPUT"});
      }
      statement(program);
    }
    return program;
  }

 private:
  // ---- token cursor ------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  bool at(TokenKind kind, std::size_t ahead = 0) const { return peek(ahead).kind == kind; }

  const Token& advance() {
    const Token& token = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return token;
  }

  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    advance();
    return true;
  }

  const Token& expect(TokenKind kind) {
    if (!at(kind)) fail_expected({std::string(token_kind_name(kind))});
    return advance();
  }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) const {
    throw ParseError(peek().span, message, std::move(expected));
  }

  [[noreturn]] void fail_expected(std::vector<std::string> expected) const {
    std::string message = "unexpected ";
    if (at(TokenKind::EndOfInput)) {
      message += "end of input";
    } else {
      message += std::string(token_kind_name(peek().kind)) + " '" + peek().text + "'";
    }
    message += "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) message += i + 1 == expected.size() ? " or " : ", ";
      message += expected[i];
    }
    fail(message, std::move(expected));
  }

  Origin origin() const { return Origin{peek().span.line, peek().span.column}; }

  bool starts_classical_literal() const {
    return at(TokenKind::Id) || (at(TokenKind::Minus) && at(TokenKind::Id, 1));
  }

  // ---- statements --------------------------------------------------------

  void statement(Program& program) {
    const Origin where = origin();
    if (accept(TokenKind::Cons)) {
      Rule rule{Disjunction{}, optional_body(), where};
      expect(TokenKind::Dot);
      program.rules.push_back(std::move(rule));
      return;
    }
    if (accept(TokenKind::Wcons)) {
      WeakConstraint weak;
      weak.origin = where;
      weak.body = optional_body();
      expect(TokenKind::Dot);
      expect(TokenKind::SquareOpen);
      weak.weight = term();
      if (accept(TokenKind::At)) weak.level = term();
      while (accept(TokenKind::Comma)) weak.tuple.push_back(term());
      expect(TokenKind::SquareClose);
      program.weaks.push_back(std::move(weak));
      return;
    }

    Head head = this->head();
    if (const auto* disjunction = std::get_if<Disjunction>(&head);
        disjunction != nullptr && disjunction->atoms.size() == 1 && at(TokenKind::QueryMark)) {
      advance();
      program.query = Query{disjunction->atoms.front(), where};
      return;
    }
    Rule rule{std::move(head), {}, where};
    if (accept(TokenKind::Cons)) rule.body = optional_body();
    expect(TokenKind::Dot);
    program.rules.push_back(std::move(rule));
  }

  std::vector<Literal> optional_body() {
    if (at(TokenKind::Dot)) return {};
    return body();
  }

  Head head() {
    if (at(TokenKind::CurlyOpen)) return choice(std::nullopt);
    if (starts_classical_literal()) {
      const std::size_t save = pos_;
      ClassicalAtom first = classical_literal();
      if (at(TokenKind::Or) || at(TokenKind::Cons) || at(TokenKind::Dot) || at(TokenKind::QueryMark)) {
        Disjunction disjunction;
        disjunction.atoms.push_back(std::move(first));
        while (accept(TokenKind::Or)) disjunction.atoms.push_back(classical_literal());
        return disjunction;
      }
      pos_ = save;
    }
    if (!starts_term()) fail_expected({"ID", "MINUS", "CURLY_OPEN", "CONS", "WCONS"});
    Term bound = term();
    const auto rel = relation_of(peek().kind);
    if (!rel) {
      std::vector<std::string> expected{"OR", "CONS", "DOT", "QUERY_MARK"};
      expected.insert(expected.end(), kRelationNames.begin(), kRelationNames.end());
      fail_expected(std::move(expected));
    }
    advance();
    return choice(Guard{*rel, std::move(bound)});
  }

  ChoiceAtom choice(std::optional<Guard> left) {
    ChoiceAtom atom;
    atom.left = std::move(left);
    expect(TokenKind::CurlyOpen);
    if (!at(TokenKind::CurlyClose)) {
      do {
        ChoiceElement element;
        if (!starts_classical_literal()) fail_expected({"ID", "MINUS"});
        element.atom = classical_literal();
        if (accept(TokenKind::Colon) && !at(TokenKind::Semicolon) && !at(TokenKind::CurlyClose)) {
          element.condition = naf_literals();
        }
        atom.elements.push_back(std::move(element));
      } while (accept(TokenKind::Semicolon));
    }
    expect(TokenKind::CurlyClose);
    atom.right = optional_right_guard();
    return atom;
  }

  std::optional<Guard> optional_right_guard() {
    const auto rel = relation_of(peek().kind);
    if (!rel) return std::nullopt;
    advance();
    return Guard{*rel, term()};
  }

  // ---- literals ----------------------------------------------------------

  std::vector<Literal> body() {
    std::vector<Literal> literals;
    do {
      literals.push_back(body_literal());
    } while (accept(TokenKind::Comma));
    return literals;
  }

  Literal body_literal() {
    const bool naf = accept(TokenKind::Naf);
    if (aggregate_of(peek().kind)) return Literal{naf, aggregate(std::nullopt)};
    if (starts_classical_literal()) {
      const std::size_t save = pos_;
      ClassicalAtom atom = classical_literal();
      if (!relation_of(peek().kind) && !is_arith_operator(peek().kind)) return Literal{naf, std::move(atom)};
      pos_ = save;
    }
    if (!starts_term()) {
      fail_expected(naf ? std::vector<std::string>{"ID", "MINUS", "AGGREGATE_COUNT", "AGGREGATE_MAX", "AGGREGATE_MIN",
                                                   "AGGREGATE_SUM", "term"}
                        : std::vector<std::string>{"NAF", "ID", "MINUS", "AGGREGATE_COUNT", "AGGREGATE_MAX",
                                                   "AGGREGATE_MIN", "AGGREGATE_SUM", "term"});
    }
    Term left = term();
    const auto rel = relation_of(peek().kind);
    if (!rel) fail_expected(kRelationNames);
    advance();
    if (aggregate_of(peek().kind)) return Literal{naf, aggregate(Guard{*rel, std::move(left)})};
    if (naf) fail("'not' cannot precede a built-in atom", {"AGGREGATE_COUNT", "AGGREGATE_MAX", "AGGREGATE_MIN", "AGGREGATE_SUM"});
    return Literal{false, BuiltinAtom{std::move(left), *rel, term()}};
  }

  std::vector<Literal> naf_literals() {
    std::vector<Literal> literals;
    do {
      literals.push_back(naf_literal());
    } while (accept(TokenKind::Comma));
    return literals;
  }

  Literal naf_literal() {
    const bool naf = accept(TokenKind::Naf);
    if (starts_classical_literal()) {
      const std::size_t save = pos_;
      ClassicalAtom atom = classical_literal();
      if (!relation_of(peek().kind) && !is_arith_operator(peek().kind)) return Literal{naf, std::move(atom)};
      pos_ = save;
    }
    if (naf) {
      // The grammar only allows NAF in front of a classical literal here.
      if (!starts_classical_literal()) fail_expected({"ID", "MINUS"});
      fail("'not' cannot precede a built-in atom");
    }
    if (!starts_term()) fail_expected({"NAF", "ID", "MINUS", "term"});
    Term left = term();
    const auto rel = relation_of(peek().kind);
    if (!rel) fail_expected(kRelationNames);
    advance();
    return Literal{false, BuiltinAtom{std::move(left), *rel, term()}};
  }

  ClassicalAtom classical_literal() {
    ClassicalAtom atom;
    atom.negated = accept(TokenKind::Minus);
    atom.predicate = expect(TokenKind::Id).text;
    if (accept(TokenKind::ParenOpen)) {
      if (!at(TokenKind::ParenClose)) atom.args = terms();
      expect(TokenKind::ParenClose);
    }
    return atom;
  }

  AggregateAtom aggregate(std::optional<Guard> left) {
    AggregateAtom atom;
    atom.left = std::move(left);
    const auto fn = aggregate_of(peek().kind);
    if (!fn) fail_expected({"AGGREGATE_COUNT", "AGGREGATE_MAX", "AGGREGATE_MIN", "AGGREGATE_SUM"});
    advance();
    atom.function = *fn;
    expect(TokenKind::CurlyOpen);
    if (!at(TokenKind::CurlyClose)) {
      do {
        atom.elements.push_back(aggregate_element());
      } while (accept(TokenKind::Semicolon));
    }
    expect(TokenKind::CurlyClose);
    atom.right = optional_right_guard();
    if (!atom.left && !atom.right) fail("aggregate atom needs a comparison with a term", kRelationNames);
    return atom;
  }

  AggregateElement aggregate_element() {
    AggregateElement element;
    if (!at(TokenKind::Colon) && !at(TokenKind::Semicolon) && !at(TokenKind::CurlyClose)) {
      do {
        element.terms.push_back(options_.core ? term() : basic_term());
      } while (accept(TokenKind::Comma));
    }
    if (accept(TokenKind::Colon) && !at(TokenKind::Semicolon) && !at(TokenKind::CurlyClose)) {
      element.condition = naf_literals();
    }
    return element;
  }

  // ---- terms -------------------------------------------------------------

  bool starts_term() const {
    switch (peek().kind) {
      case TokenKind::Id:
      case TokenKind::Number:
      case TokenKind::String:
      case TokenKind::Variable:
      case TokenKind::AnonymousVariable:
      case TokenKind::ParenOpen:
      case TokenKind::Minus:
        return true;
      default:
        return false;
    }
  }

  std::vector<Term> terms() {
    std::vector<Term> result;
    do {
      result.push_back(term());
    } while (accept(TokenKind::Comma));
    return result;
  }

  Term term() {
    Term left = product();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const ArithOp op = advance().kind == TokenKind::Plus ? ArithOp::Add : ArithOp::Subtract;
      left = Term::binary(op, std::move(left), product());
    }
    return left;
  }

  Term product() {
    Term left = unary();
    while (at(TokenKind::Times) || at(TokenKind::Div)) {
      const ArithOp op = advance().kind == TokenKind::Times ? ArithOp::Multiply : ArithOp::Divide;
      left = Term::binary(op, std::move(left), unary());
    }
    return left;
  }

  Term unary() {
    if (accept(TokenKind::Minus)) return Term::negate(unary());
    return primary();
  }

  Term primary() {
    switch (peek().kind) {
      case TokenKind::Id: {
        std::string name = advance().text;
        std::vector<Term> args;
        if (accept(TokenKind::ParenOpen)) {
          if (!at(TokenKind::ParenClose)) args = terms();
          expect(TokenKind::ParenClose);
        }
        return Term::functional(std::move(name), std::move(args));
      }
      case TokenKind::Number:
        return Term::integer(Integer(advance().text));
      case TokenKind::String: {
        const std::string& text = advance().text;
        return Term::string(text.substr(1, text.size() - 2));
      }
      case TokenKind::Variable:
        return Term::variable(advance().text);
      case TokenKind::AnonymousVariable:
        advance();
        return Term::anonymous();
      case TokenKind::ParenOpen: {
        advance();
        Term inner = term();
        expect(TokenKind::ParenClose);
        return inner;
      }
      default:
        fail_expected({"ID", "NUMBER", "STRING", "VARIABLE", "ANONYMOUS_VARIABLE", "PAREN_OPEN", "MINUS"});
    }
  }

  // <basic_term> ::= SYMBOLIC_CONSTANT | STRING | [MINUS] NUMBER | VARIABLE | ANONYMOUS_VARIABLE
  Term basic_term() {
    switch (peek().kind) {
      case TokenKind::Id:
        return Term::symbolic(advance().text);
      case TokenKind::String: {
        const std::string& text = advance().text;
        return Term::string(text.substr(1, text.size() - 2));
      }
      case TokenKind::Number:
        return Term::integer(Integer(advance().text));
      case TokenKind::Minus:
        advance();
        if (!at(TokenKind::Number)) fail_expected({"NUMBER"});
        return Term::integer(-Integer(advance().text));
      case TokenKind::Variable:
        return Term::variable(advance().text);
      case TokenKind::AnonymousVariable:
        advance();
        return Term::anonymous();
      default:
        fail_expected({"ID", "STRING", "NUMBER", "MINUS", "VARIABLE", "ANONYMOUS_VARIABLE"});
    }
  }

  std::span<const Token> tokens_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::span<const Token> tokens, const ParseOptions& options) {
  return Parser(tokens, options).program();
}

Program parse_text(std::string_view text, const ParseOptions& options) {
  LexOptions lex;
  lex.allow_reserved = options.core;
  const auto tokens = tokenize(text, lex);
  return parse(tokens, options);
}

}  // namespace aspcore
