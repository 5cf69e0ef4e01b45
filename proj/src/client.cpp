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

#include "restpark/client.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <charconv>

#include "restpark/http_service.hpp"
#include "restpark/jsonld.hpp"

namespace restpark {

namespace {

struct UrlParts {
  std::string host;
  int port = 80;
  std::string path;  // everything after the authority, may be empty
};

UrlParts split_http_url(std::string_view url) {
  constexpr std::string_view kScheme = "http://";
  if (url.size() < kScheme.size() ||
      !std::equal(kScheme.begin(), kScheme.end(), url.begin(),
                  [](char a, char b) { return a == std::tolower(b); })) {
    throw Error("only http:// URLs are supported: " + std::string(url));
  }
  url.remove_prefix(kScheme.size());
  const std::size_t slash = url.find_first_of("/?#");
  const std::string_view authority = url.substr(0, slash);
  UrlParts parts;
  parts.path = slash == std::string_view::npos ? "" : std::string(url.substr(slash));

  std::string_view host = authority;
  std::string_view port;
  if (!authority.empty() && authority.front() == '[') {
    const std::size_t close = authority.find(']');
    if (close == std::string_view::npos) throw Error("bad IPv6 host in URL");
    host = authority.substr(1, close - 1);
    if (close + 1 < authority.size()) {
      if (authority[close + 1] != ':') throw Error("bad authority in URL");
      port = authority.substr(close + 2);
    }
  } else if (const auto colon = authority.rfind(':');
             colon != std::string_view::npos) {
    host = authority.substr(0, colon);
    port = authority.substr(colon + 1);
  }
  if (host.empty()) throw Error("URL has no host: " + std::string(url));
  parts.host = std::string(host);
  if (!port.empty()) {
    const auto [ptr, ec] =
        std::from_chars(port.data(), port.data() + port.size(), parts.port);
    if (ec != std::errc() || ptr != port.data() + port.size() ||
        parts.port <= 0 || parts.port > 65535) {
      throw Error("bad port in URL: " + std::string(port));
    }
  }
  return parts;
}

std::string origin_of(const UrlParts& p) {
  const bool v6 = p.host.find(':') != std::string::npos;
  std::string out = "http://";
  out += v6 ? "[" + p.host + "]" : p.host;
  out += ":" + std::to_string(p.port);
  return out;
}

}  // namespace

Endpoint Endpoint::parse(std::string_view base_url) {
  UrlParts parts = split_http_url(base_url);
  if (parts.path.find_first_of("?#") != std::string::npos) {
    throw Error("endpoint URL must not have a query or fragment: " +
                std::string(base_url));
  }
  if (!parts.path.empty() && parts.path.back() == '/') {
    throw Error("endpoint URL must not end with '/': " + std::string(base_url));
  }
  Endpoint e;
  e.base_url_ = std::string(base_url);
  e.host_ = std::move(parts.host);
  e.port_ = parts.port;
  e.mount_prefix_ = std::move(parts.path);
  return e;
}

std::string Endpoint::origin() const {
  return origin_of({host_, port_, {}});
}

std::string build_url(const Endpoint& endpoint, const TriplePattern& pattern,
                      const PageRequest& page) {
  std::string url = endpoint.base_url() + std::string(kResourcePath);
  const std::string query = encode_query(pattern, page);
  if (!query.empty()) url += "?" + query;
  return url;
}

std::optional<std::string> find_link(std::string_view header,
                                     std::string_view rel) {
  std::size_t pos = 0;
  while (pos < header.size()) {
    const std::size_t open = header.find('<', pos);
    if (open == std::string_view::npos) return std::nullopt;
    const std::size_t close = header.find('>', open);
    if (close == std::string_view::npos) return std::nullopt;
    const std::string_view target = header.substr(open + 1, close - open - 1);
    std::size_t next = header.find('<', close);
    const std::string_view params = header.substr(
        close + 1, (next == std::string_view::npos ? header.size() : next) -
                       close - 1);
    // rel="a b" or rel=a; relation types are space separated.
    const std::size_t r = params.find("rel=");
    if (r != std::string_view::npos) {
      std::string_view value = params.substr(r + 4);
      if (!value.empty() && value.front() == '"') {
        value.remove_prefix(1);
        value = value.substr(0, value.find('"'));
      } else {
        value = value.substr(0, value.find_first_of(";, "));
      }
      std::size_t i = 0;
      while (i <= value.size()) {
        std::size_t j = value.find(' ', i);
        if (j == std::string_view::npos) j = value.size();
        if (value.substr(i, j - i) == rel) return std::string(target);
        i = j + 1;
      }
    }
    if (next == std::string_view::npos) break;
    pos = next;
  }
  return std::nullopt;
}

PageResult Client::fetch(const std::string& url,
                              const PageRequest& requested) const {
  UrlParts parts;
  try {
    parts = split_http_url(url);
  } catch (const Error& e) {
    throw ClientError(ClientError::Kind::transport, e.what());
  }
  httplib::Client http(parts.host, parts.port);
  const auto seconds =
      std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
      options_.timeout - seconds);
  http.set_connection_timeout(seconds.count(), micros.count());
  http.set_read_timeout(seconds.count(), micros.count());
  http.set_url_encode(false);

  const std::string target = parts.path.empty() ? "/" : parts.path;
  const auto res = http.Get(target);
  if (!res) {
    throw ClientError(ClientError::Kind::transport,
                      "GET " + url + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    std::string reason = res->body;
    while (!reason.empty() && (reason.back() == '\n' || reason.back() == '\r')) {
      reason.pop_back();
    }
    throw ClientError(ClientError::Kind::status,
                      "GET " + url + " returned " + std::to_string(res->status) +
                          (reason.empty() ? "" : ": " + reason),
                      res->status, reason);
  }

  PageResult out;
  try {
    out.triples = jsonld::decode_graph(res->body);
  } catch (const jsonld::DecodeError& e) {
    throw ClientError(ClientError::Kind::decode,
                      "GET " + url + ": undecodable body: " + e.what());
  }
  out.page = requested.page();
  out.page_size = requested.page_size();

  const bool has_total = res->has_header("X-Total-Count");
  if (has_total) {
    const std::string text = res->get_header_value("X-Total-Count");
    const auto [ptr, ec] = std::from_chars(
        text.data(), text.data() + text.size(), out.total_count);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ClientError(ClientError::Kind::decode,
                        "GET " + url + ": bad X-Total-Count '" + text + "'");
    }
  } else {
    out.total_count = (requested.page() - 1) * requested.page_size() +
                           out.triples.size();
  }

  // The Link target itself is not used: httplib percent-decodes header
  // values, so the next page URL is rebuilt from the pattern instead.
  if (res->has_header("Link")) {
    out.has_next = find_link(res->get_header_value("Link"), "next").has_value();
  } else if (has_total) {
    out.has_next = page_has_next(requested.page(), requested.page_size(),
                                      out.total_count);
  } else {
    out.has_next = out.triples.size() == requested.page_size();
  }
  return out;
}

PageResult Client::query_page(const Endpoint& endpoint,
                              const TriplePattern& pattern,
                              const PageRequest& page) const {
  return fetch(build_url(endpoint, pattern, page), page);
}

std::vector<Triple> Client::query_all(const Endpoint& endpoint,
                                      const TriplePattern& pattern,
                                      std::uint64_t page_size) const {
  std::vector<Triple> out;
  PageRequest request(1, page_size);
  std::string url = build_url(endpoint, pattern, request);
  for (std::size_t fetched = 0;; ++fetched) {
    if (fetched == options_.max_pages) {
      throw ClientError(ClientError::Kind::max_pages,
                        "gave up after " + std::to_string(fetched) +
                            " pages from " + endpoint.base_url());
    }
    PageResult f = fetch(url, request);
    out.insert(out.end(), std::make_move_iterator(f.triples.begin()),
               std::make_move_iterator(f.triples.end()));
    if (!f.has_next) break;
    request = PageRequest(request.page() + 1, request.page_size());
    url = build_url(endpoint, pattern, request);
  }
  return out;
}

}  // namespace restpark
