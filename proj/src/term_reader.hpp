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
#include <string_view>

#include "restpark/term.hpp"

namespace restpark::detail {

// Cursor over N-Triples text that reads one term at a time.
class TermReader {
 public:
  explicit TermReader(std::string_view text) : text_(text) {}

  Term read(KindSet allowed);

  // Skips spaces and tabs; returns true if anything was skipped.
  bool skip_blanks();

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  std::size_t pos() const { return pos_; }

 private:
  [[noreturn]] void fail(std::string_view what) const;
  std::string read_iriref();
  std::string read_blank_label();
  std::string read_quoted();
  std::string read_language();
  char32_t read_hex(int digits);

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace restpark::detail
