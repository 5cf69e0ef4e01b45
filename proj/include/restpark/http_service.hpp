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

#include <map>
#include <string>
#include <string_view>

#include "restpark/error.hpp"
#include "restpark/term.hpp"
#include "restpark/triple_store.hpp"

namespace restpark {

inline constexpr std::string_view kResourcePath = "/restpark";

enum class Position { subject, predicate, object };

std::string_view param_name(Position position);

/// A rejected query parameter. Maps to HTTP 400.
class QueryError : public Error {
 public:
  QueryError(std::string parameter, const std::string& reason)
      : Error("invalid parameter '" + parameter + "': " + reason),
        parameter_(std::move(parameter)) {}
  const std::string& parameter() const { return parameter_; }

 private:
  std::string parameter_;
};

struct ParsedQuery {
  TriplePattern pattern;
  PageRequest page;
};

// Reads a decoded parameter value as a term. Values starting with '"' are
// N-Triples literals (object only in effect: elsewhere they fail the IRI
// check), values starting with "_:" are blank nodes, anything else is IRI
// text.
Term parse_param_term(Position position, std::string_view value);

// Inverse of parse_param_term.
std::string format_param_term(const Term& term);

/// Parses the raw (still percent-encoded) query component of a request.
///
/// Accepted names are subject, predicate, object, page and page_size; each
/// at most once. '+' decodes to a space. Throws QueryError naming the
/// offending parameter.
ParsedQuery parse_query_params(std::string_view raw_query);

// Builds a query string in the canonical parameter order. Page parameters
// are omitted at their defaults unless `explicit_page` is set.
std::string encode_query(const TriplePattern& pattern, const PageRequest& page,
                         bool explicit_page = false);

struct HttpResponseSpec {
  int status = 200;
  std::map<std::string, std::string> headers;
  std::string body;
};

struct ServiceOptions {
  // Empty, or "/segment[/segment...]" without a trailing slash.
  std::string mount_prefix;
};

// Validates a mount prefix, adding a leading '/' and dropping trailing ones.
std::string normalize_mount_prefix(std::string_view prefix);

/// Answers one request against `store`. Total: every outcome is a response.
///
///  - `<mount>/restpark` + GET: 200, JSON-LD body, X-Total-Count and Link
///  - other paths: 404; other methods: 405; bad parameters: 400
HttpResponseSpec handle_request(const TripleStore& store,
                                std::string_view method, std::string_view path,
                                std::string_view raw_query,
                                const ServiceOptions& options = {});

}  // namespace restpark
