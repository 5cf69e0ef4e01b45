/*
Copyright 2026 The Restpark Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "restpark/error.hpp"
#include "restpark/term.hpp"

namespace restpark::ntriples {

struct LineError {
  std::size_t line;  // 1-based
  std::string message;

  friend bool operator==(const LineError&, const LineError&) = default;
};

struct ParseReport {
  std::vector<Triple> triples;
  std::vector<LineError> errors;
};

/// Thrown by strict parsing at the first malformed line.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses an N-Triples document. Lines may end in "\n" or "\r\n". In
// non-strict mode malformed lines are skipped and reported; in strict mode
// the first one throws SyntaxError. Duplicates are kept.
ParseReport parse_document(std::string_view text, bool strict);

// Parses one statement line (no line terminator). Returns false for blank
// and comment-only lines; throws TermError on malformed input.
bool parse_line(std::string_view line, std::vector<Triple>& out);

std::string format_triple(const Triple& triple);

// One canonical "s p o .\n" line per triple, in the given order.
std::string serialize_document(std::span<const Triple> triples);

}  // namespace restpark::ntriples
