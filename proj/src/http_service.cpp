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

#include "restpark/http_service.hpp"

#include <array>
#include <charconv>
#include <optional>

#include "restpark/jsonld.hpp"
#include "restpark/percent.hpp"
#include "restpark/utf8.hpp"

namespace restpark {

namespace {

constexpr std::string_view kTextPlain = "text/plain; charset=utf-8";

std::uint64_t parse_positive(std::string_view name, std::string_view text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw QueryError(std::string(name), "expected a positive integer");
  }
  return value;
}

HttpResponseSpec plain(int status, std::string reason) {
  HttpResponseSpec r;
  r.status = status;
  r.headers["Content-Type"] = std::string(kTextPlain);
  r.headers["Access-Control-Allow-Origin"] = "*";
  r.body = std::move(reason);
  r.body += '\n';
  return r;
}

}  // namespace

std::string_view param_name(Position position) {
  switch (position) {
    case Position::subject: return "subject";
    case Position::predicate: return "predicate";
    case Position::object: return "object";
  }
  return "?";
}

Term parse_param_term(Position position, std::string_view value) {
  const std::string name(param_name(position));
  if (!utf8::is_valid(value)) throw QueryError(name, "not valid UTF-8");
  try {
    if (position == Position::object && !value.empty() &&
        value.front() == '"') {
      return parse_term(value, {TermKind::literal});
    }
    if (position != Position::predicate && value.starts_with("_:")) {
      return Term::blank(std::string(value.substr(2)));
    }
    return Term::iri(std::string(value));
  } catch (const TermError& e) {
    throw QueryError(name, e.what());
  }
}

std::string format_param_term(const Term& term) {
  switch (term.kind()) {
    case TermKind::iri: return term.value();
    case TermKind::blank: return "_:" + term.value();
    case TermKind::literal: return format_term(term);
  }
  return {};
}

ParsedQuery parse_query_params(std::string_view raw_query) {
  std::array<std::optional<std::string>, 5> seen;
  static constexpr std::array<std::string_view, 5> kNames = {
      "subject", "predicate", "object", "page", "page_size"};

  std::size_t start = 0;
  while (start <= raw_query.size()) {
    std::size_t end = raw_query.find('&', start);
    if (end == std::string_view::npos) end = raw_query.size();
    const std::string_view pair = raw_query.substr(start, end - start);
    start = end + 1;
    if (pair.empty()) continue;

    const std::size_t eq = pair.find('=');
    const auto raw_name = pair.substr(0, eq);
    const auto raw_value =
        eq == std::string_view::npos ? std::string_view{} : pair.substr(eq + 1);
    const auto name = percent::decode(raw_name, true);
    if (!name) {
      throw QueryError(std::string(raw_name), "invalid percent-encoding");
    }
    std::size_t slot = 0;
    while (slot < kNames.size() && kNames[slot] != *name) ++slot;
    if (slot == kNames.size()) throw QueryError(*name, "unknown parameter");
    if (seen[slot]) throw QueryError(*name, "repeated parameter");
    auto value = percent::decode(raw_value, true);
    if (!value) throw QueryError(*name, "invalid percent-encoding");
    seen[slot] = std::move(*value);
  }

  ParsedQuery query;
  if (seen[0]) query.pattern.subject = parse_param_term(Position::subject, *seen[0]);
  if (seen[1]) {
    query.pattern.predicate = parse_param_term(Position::predicate, *seen[1]);
  }
  if (seen[2]) query.pattern.object = parse_param_term(Position::object, *seen[2]);

  const std::uint64_t page = seen[3] ? parse_positive("page", *seen[3]) : 1;
  const std::uint64_t size =
      seen[4] ? parse_positive("page_size", *seen[4]) : kDefaultPageSize;
  if (page < 1) throw QueryError("page", "must be >= 1");
  if (size < 1 || size > kMaxPageSize) {
    throw QueryError("page_size",
                     "must be between 1 and " + std::to_string(kMaxPageSize));
  }
  query.page = PageRequest(page, size);
  return query;
}

std::string encode_query(const TriplePattern& pattern, const PageRequest& page,
                         bool explicit_page) {
  std::string out;
  const auto add = [&](std::string_view name, std::string_view value) {
    if (!out.empty()) out += '&';
    out += name;
    out += '=';
    out += percent::encode(value);
  };
  if (pattern.subject) add("subject", format_param_term(*pattern.subject));
  if (pattern.predicate) add("predicate", format_param_term(*pattern.predicate));
  if (pattern.object) add("object", format_param_term(*pattern.object));
  if (explicit_page || page.page() != 1) {
    add("page", std::to_string(page.page()));
  }
  if (page.page_size() != kDefaultPageSize) {
    add("page_size", std::to_string(page.page_size()));
  }
  return out;
}

std::string normalize_mount_prefix(std::string_view prefix) {
  while (!prefix.empty() && prefix.back() == '/') prefix.remove_suffix(1);
  if (prefix.empty()) return {};
  std::string out;
  if (prefix.front() != '/') out += '/';
  out += prefix;
  for (char c : out) {
    if (c == '?' || c == '#' || static_cast<unsigned char>(c) <= 0x20) {
      throw Error("invalid mount prefix '" + std::string(prefix) + "'");
    }
  }
  return out;
}

HttpResponseSpec handle_request(const TripleStore& store,
                                std::string_view method, std::string_view path,
                                std::string_view raw_query,
                                const ServiceOptions& options) {
  const std::string resource = options.mount_prefix + std::string(kResourcePath);
  if (path != resource) return plain(404, "not found");
  if (method != "GET") {
    auto r = plain(405, "method not allowed; use GET");
    r.headers["Allow"] = "GET";
    return r;
  }

  ParsedQuery query;
  try {
    query = parse_query_params(raw_query);
  } catch (const QueryError& e) {
    return plain(400, e.what());
  }

  const PageResult page = store.match_page(query.pattern, query.page);

  HttpResponseSpec r;
  r.status = 200;
  r.headers["Content-Type"] = std::string(jsonld::kMediaType);
  r.headers["Access-Control-Allow-Origin"] = "*";
  r.headers["Access-Control-Expose-Headers"] = "X-Total-Count, Link";
  r.headers["X-Total-Count"] = std::to_string(page.total_count);

  const auto link_to = [&](std::uint64_t target_page, std::string_view rel) {
    const PageRequest req(target_page, page.page_size);
    return "<" + resource + "?" + encode_query(query.pattern, req, true) +
           ">; rel=\"" + std::string(rel) + "\"";
  };
  std::string links;
  if (page.has_next) links = link_to(page.page + 1, "next");
  if (page.page > 1) {
    if (!links.empty()) links += ", ";
    links += link_to(page.page - 1, "prev");
  }
  if (!links.empty()) r.headers["Link"] = std::move(links);

  r.body = jsonld::encode_graph(page.triples);
  return r;
}

}  // namespace restpark
