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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "restpark/error.hpp"
#include "restpark/term.hpp"

namespace restpark::jsonld {

inline constexpr std::string_view kMediaType = "application/ld+json";

class DecodeError : public Error {
 public:
  using Error::Error;
};

/// Encodes triples as a flattened, context-free JSON-LD document:
///
///   {"@graph":[{"@id":"<subject>","<predicate>":[<value>,...]},...]}
///
/// with `{"@id":...}` values for IRIs and blank nodes (`"_:label"`) and
/// `{"@value":...}` plus `@language` or `@type` for literals (no `@type` for
/// xsd:string). Input order and duplicates do not affect the output:
/// subjects, predicate keys and values are emitted in canonical order, so
/// the bytes depend only on the triple set.
std::string encode_graph(std::span<const Triple> triples);

/// Inverse of encode_graph. Returns the triples in SPO order without
/// duplicates. Rejects anything outside the profile above.
std::vector<Triple> decode_graph(std::string_view document);

}  // namespace restpark::jsonld
