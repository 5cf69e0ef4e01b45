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

#include <optional>
#include <string>
#include <string_view>

namespace restpark::percent {

// Encodes every byte outside the RFC 3986 unreserved set as %XX.
std::string encode(std::string_view text);

// Decodes %XX sequences, and '+' as a space when `plus_as_space` is set.
// Returns nullopt on a truncated or non-hex escape.
std::optional<std::string> decode(std::string_view text, bool plus_as_space);

}  // namespace restpark::percent
