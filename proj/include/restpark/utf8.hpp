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

#include <cstdint>
#include <string>
#include <string_view>

namespace restpark::utf8 {

// True when `text` is well-formed UTF-8 (no overlongs, no surrogates).
bool is_valid(std::string_view text);

// Appends the UTF-8 encoding of `code_point`. Returns false for surrogates
// and values above U+10FFFF, leaving `out` untouched.
bool append(std::string& out, std::uint32_t code_point);

}  // namespace restpark::utf8
