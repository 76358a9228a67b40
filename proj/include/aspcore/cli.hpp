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

#ifndef ASPCORE_CLI_HPP
#define ASPCORE_CLI_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "aspcore/ground.hpp"

namespace aspcore {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNoAnswerSets = 1;
inline constexpr int kSyntaxError = 2;
inline constexpr int kRestriction = 3;
inline constexpr int kBounds = 4;
inline constexpr int kUsage = 64;
inline constexpr int kNoInput = 66;
}  // namespace exit_code

struct RunConfig {
  enum class Command { Parse, Check, Ground, Solve, Query };

  Command command = Command::Parse;
  std::string input;  // empty or "-" for standard input
  bool core = false;  // accept reserved auxiliary names (tool-generated input)

  bool ast = false;
  bool dump_tokens = false;
  bool dump_core = false;
  bool dump_graph = false;

  UniverseBounds bounds;
  bool naive = false;

  std::size_t models = 0;  // 0 = all
  bool opt = false;
  std::size_t brute_force_limit = 24;
  bool search = false;
};

// Either a configuration or the exit code to terminate with (after help,
// version or a usage error has been printed).
std::variant<RunConfig, int> parse_command_line(const std::vector<std::string>& args, std::ostream& out,
                                                std::ostream& err);

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// parse_command_line followed by run, reading standard input when asked to.
int main_entry(int argc, char** argv);

}  // namespace aspcore

#endif  // ASPCORE_CLI_HPP
