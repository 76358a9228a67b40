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

#include "aspcore/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "aspcore/analysis.hpp"
#include "aspcore/rewrite.hpp"
#include "aspcore/solve.hpp"

namespace aspcore {

namespace {

constexpr std::string_view kVersion = "ASP-Core-2";

class Reporter {
 public:
  Reporter(std::string source, std::ostream& err) : source_(std::move(source)), err_(err) {}

  void error(std::size_t line, std::size_t column, const std::string& message) const {
    emit(line, column, "error", message);
  }
  void warning(std::size_t line, std::size_t column, const std::string& message) const {
    emit(line, column, "warning", message);
  }
  void error(const std::string& message) const { err_ << source_ << ": error: " << message << "\n"; }
  void warning(const std::string& message) const { err_ << source_ << ": warning: " << message << "\n"; }

 private:
  void emit(std::size_t line, std::size_t column, std::string_view kind, const std::string& message) const {
    err_ << source_ << ":" << line << ":" << column << ": " << kind << ": " << message << "\n";
  }

  std::string source_;
  std::ostream& err_;
};

// Safety and aggregate recursion; returns false if the program is rejected.
bool check_restrictions(const Program& core, const Reporter& report) {
  bool ok = true;
  auto unsafe = [&](const SafetyReport& safety, const Origin& origin, const std::string& statement) {
    for (const auto& u : safety.unbound) {
      report.error(origin.line, origin.column,
                   std::string(u.scope == UnboundVariable::Scope::Global ? "unsafe variable " : "unsafe local variable ") +
                       u.name + " in '" + statement + "': " + u.reason);
      ok = false;
    }
  };
  for (const auto& rule : core.rules) unsafe(check_safety(rule), rule.origin, to_string(rule));
  for (const auto& weak : core.weaks) unsafe(check_safety(weak), weak.origin, to_string(weak));
  if (core.query) unsafe(check_safety(*core.query), core.query->origin, to_string(*core.query));
  if (!ok) return false;

  const auto graph = build_dependency_graph(core);
  for (const auto& v : check_aggregates_nonrecursive(core, graph)) {
    std::string path;
    for (const auto& s : v.path) path += (path.empty() ? "" : " -> ") + s.str();
    report.error(v.origin.line, v.origin.column,
                 "recursive aggregate: atoms of " + v.from.str() + " inside an aggregate reach the head " +
                     v.to.str() + " (" + path + ")");
    ok = false;
  }
  return ok;
}

void print_warnings(const Program& program, const Reporter& report) {
  for (const auto& w : check_arities(program)) report.warning(w.origin.line, w.origin.column, w.message);
  for (const auto& w : lint_undefined_arithmetic(program)) report.warning(w.origin.line, w.origin.column, w.message);
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int dump_tokens(const std::string& text, const RunConfig& config, std::ostream& out) {
  LexOptions options;
  options.allow_reserved = config.core;
  for (const auto& token : tokenize(text, options)) {
    if (token.kind == TokenKind::EndOfInput) break;
    out << token_kind_name(token.kind) << " " << nlohmann::json(token.text).dump() << " " << token.span.line << ":"
        << token.span.column << "\n";
  }
  return exit_code::kOk;
}

void print_query_answer(const QueryAnswer& answer, std::ostream& out) {
  switch (answer.status) {
    case QueryAnswer::Status::True:
      out << "TRUE\n";
      return;
    case QueryAnswer::Status::False:
      out << "FALSE\n";
      return;
    case QueryAnswer::Status::Inconsistent:
      out << "INCONSISTENT\n";
      return;
    case QueryAnswer::Status::Substitutions:
      for (const auto& row : answer.substitutions) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i > 0) out << " ";
          out << answer.variables[i] << "=" << to_string(row[i]);
        }
        out << "\n";
      }
      return;
  }
}

int run_pipeline(const RunConfig& config, const std::string& text, const Reporter& report, std::ostream& out) {
  if (config.dump_tokens) return dump_tokens(text, config, out);

  ParseOptions parse_options;
  parse_options.core = config.core;
  const Program program = parse_text(text, parse_options);
  if (config.command == RunConfig::Command::Parse) {
    out << (config.ast ? ast_json(program) + "\n" : pretty_print(program));
    return exit_code::kOk;
  }
  if (config.command == RunConfig::Command::Query && !program.query) {
    report.error("the program has no query (expected a final statement of the form 'atom?')");
    return exit_code::kSyntaxError;
  }

  print_warnings(program, report);
  const Program core = desugar(program);
  if (!check_restrictions(core, report)) return exit_code::kRestriction;

  if (config.command == RunConfig::Command::Check) {
    if (config.dump_core) out << pretty_print(core);
    if (config.dump_graph) out << dump_graph(build_dependency_graph(core));
    return exit_code::kOk;
  }

  GroundOptions ground_options;
  ground_options.bounds = config.bounds;
  ground_options.naive = config.naive;
  const GroundProgram ground = ground_program(core, ground_options);
  if (config.command == RunConfig::Command::Ground) {
    out << pretty_print(ground);
    return exit_code::kOk;
  }

  SolveOptions solve_options;
  solve_options.brute_force_limit = config.brute_force_limit;
  solve_options.search = config.search;

  if (config.command == RunConfig::Command::Query) {
    const auto sets = answer_sets(ground, solve_options);
    const auto answer = answer_query(*program.query, sets);
    print_query_answer(answer, out);
    return answer.status == QueryAnswer::Status::Inconsistent ? exit_code::kNoAnswerSets : exit_code::kOk;
  }

  std::size_t printed = 0;
  auto limit_reached = [&] { return config.models != 0 && printed >= config.models; };
  if (config.opt) {
    bool non_integer = false;
    const auto optimal = optimal_answer_sets(ground, solve_options, &non_integer);
    if (non_integer) report.warning("weak constraints with non-integer weights or levels do not contribute to costs");
    const auto levels = weak_levels(ground);
    for (const auto& ranked : optimal) {
      if (limit_reached()) break;
      out << ranked.atoms.str() << "\n";
      if (!levels.empty()) {
        out << "COSTS";
        for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
          auto c = ranked.costs.find(*it);
          out << " " << it->str() << "=" << (c == ranked.costs.end() ? std::string("0") : c->second.str());
        }
        out << "\n";
      }
      ++printed;
    }
    if (optimal.empty()) report.error("no answer sets");
    return optimal.empty() ? exit_code::kNoAnswerSets : exit_code::kOk;
  }
  const auto sets = answer_sets(ground, solve_options, config.models);
  for (const auto& s : sets) {
    if (limit_reached()) break;
    out << s.str() << "\n";
    ++printed;
  }
  if (sets.empty()) report.error("no answer sets");
  return sets.empty() ? exit_code::kNoAnswerSets : exit_code::kOk;
}

}  // namespace

std::variant<RunConfig, int> parse_command_line(const std::vector<std::string>& args, std::ostream& out,
                                                std::ostream& err) {
  RunConfig config;
  CLI::App app{"Parser, checker, grounder and reference solver for ASP-Core-2 programs", "aspcore"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  long long max_int = 1000;
  std::size_t max_nesting = 4;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", config.input, "Input program (standard input if omitted or '-')");
    sub->add_flag("--core", config.core, "Accept reserved auxiliary names and general terms in aggregate elements");
  };
  auto bounds = [&](CLI::App* sub) {
    sub->add_option("--max-int", max_int, "Largest absolute integer value in derivable atoms")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--max-nesting", max_nesting, "Deepest functional term nesting in derivable atoms");
    sub->add_flag("--naive", config.naive, "Instantiate every substitution over the bounded universe");
  };
  auto solving = [&](CLI::App* sub) {
    sub->add_option("--brute-force-limit", config.brute_force_limit,
                    "Largest candidate base enumerated subset by subset");
    sub->add_flag("--search", config.search, "Use depth-first search instead of plain subset enumeration");
  };

  auto* parse = app.add_subcommand("parse", "Print the canonical form of a program");
  common(parse);
  parse->add_flag("--ast", config.ast, "Print the syntax tree as JSON");
  parse->add_flag("--dump-tokens", config.dump_tokens, "Print one token per line");

  auto* check = app.add_subcommand("check", "Desugar and check the program restrictions");
  common(check);
  check->add_flag("--dump-core", config.dump_core, "Print the desugared program");
  check->add_flag("--dump-graph", config.dump_graph, "Print the predicate dependency graph");

  auto* ground = app.add_subcommand("ground", "Print the ground instantiation");
  common(ground);
  bounds(ground);

  auto* solve = app.add_subcommand("solve", "Print answer sets");
  common(solve);
  bounds(solve);
  solving(solve);
  solve->add_option("--models", config.models, "Number of answer sets to print (0 = all)");
  solve->add_flag("--opt", config.opt, "Print only optimal answer sets with their costs");

  auto* query = app.add_subcommand("query", "Answer the program's query cautiously");
  common(query);
  bounds(query);
  solving(query);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_code::kOk;
    }
    app.exit(e, out, err);
    return exit_code::kUsage;
  }

  if (parse->parsed()) config.command = RunConfig::Command::Parse;
  if (check->parsed()) config.command = RunConfig::Command::Check;
  if (ground->parsed()) config.command = RunConfig::Command::Ground;
  if (solve->parsed()) config.command = RunConfig::Command::Solve;
  if (query->parsed()) config.command = RunConfig::Command::Query;
  config.bounds.max_int = Integer(max_int);
  config.bounds.max_nesting = max_nesting;
  return config;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const bool from_stdin = config.input.empty() || config.input == "-";
  const Reporter report(from_stdin ? "<stdin>" : config.input, err);
  std::string text;
  if (from_stdin) {
    text = read_all(in);
  } else {
    std::ifstream file(config.input, std::ios::binary);
    if (!file) {
      report.error("cannot read input file");
      return exit_code::kNoInput;
    }
    text = read_all(file);
  }

  try {
    return run_pipeline(config, text, report, out);
  } catch (const LexError& e) {
    report.error(e.span().line, e.span().column, e.what());
    return exit_code::kSyntaxError;
  } catch (const ParseError& e) {
    report.error(e.span().line, e.span().column, e.what());
    return exit_code::kSyntaxError;
  } catch (const BoundExceeded& e) {
    report.error(e.what());
    return exit_code::kBounds;
  } catch (const CapacityExceeded& e) {
    report.error(e.what());
    return exit_code::kBounds;
  }
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto parsed = parse_command_line(args, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<RunConfig>(parsed), std::cin, std::cout, std::cerr);
}

}  // namespace aspcore
