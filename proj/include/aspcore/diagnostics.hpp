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

#ifndef ASPCORE_DIAGNOSTICS_HPP
#define ASPCORE_DIAGNOSTICS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace aspcore {

// Byte range in the source text. Lines and columns are 1-based; column counts bytes.
struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourceSpan&) const = default;
};

class LexError : public std::runtime_error {
 public:
  LexError(SourceSpan span, const std::string& message)
      : std::runtime_error(message), span_(span) {}

  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, const std::string& message, std::vector<std::string> expected = {})
      : std::runtime_error(message), span_(span), expected_(std::move(expected)) {}

  const SourceSpan& span() const { return span_; }
  // Token kinds (or grammar symbols) that would have been accepted at `span`.
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

// A derivable atom left the declared integer or nesting bounds.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or instantiation grew past a configured size limit.
class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aspcore

#endif  // ASPCORE_DIAGNOSTICS_HPP
