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

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "restpark/error.hpp"
#include "restpark/term.hpp"
#include "restpark/triple_store.hpp"

namespace restpark {

/// Base URL of a Restpark service, e.g. "http://dbpedia.org" or
/// "http://www4.wiwiss.fu-berlin.de/dblp". Only plain http is supported.
class Endpoint {
 public:
  // Throws Error on anything but http://host[:port][/prefix] with no query,
  // fragment or trailing slash.
  static Endpoint parse(std::string_view base_url);

  const std::string& base_url() const { return base_url_; }
  const std::string& host() const { return host_; }
  int port() const { return port_; }
  // "" or "/segment..."; the resource lives at mount_prefix + "/restpark".
  const std::string& mount_prefix() const { return mount_prefix_; }
  std::string origin() const;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;

 private:
  std::string base_url_;
  std::string host_;
  int port_ = 80;
  std::string mount_prefix_;
};

// <base>/restpark?subject=..&predicate=..&object=..&page=..&page_size=..
// Unbound positions and default page parameters are omitted.
std::string build_url(const Endpoint& endpoint, const TriplePattern& pattern,
                      const PageRequest& page = {});

class ClientError : public Error {
 public:
  enum class Kind { transport, status, decode, max_pages };

  ClientError(Kind kind, const std::string& message, int status = 0,
              std::string reason = {})
      : Error(message), kind_(kind), status_(status), reason_(std::move(reason)) {}

  Kind kind() const { return kind_; }
  // HTTP status for Kind::status, otherwise 0.
  int status() const { return status_; }
  // Response body for Kind::status.
  const std::string& reason() const { return reason_; }

 private:
  Kind kind_;
  int status_;
  std::string reason_;
};

struct ClientOptions {
  std::chrono::milliseconds timeout{30000};
  std::size_t max_pages = 10000;
};

/// Restpark client. Stateless between calls, so one instance may be used
/// from several threads at once.
class Client {
 public:
  Client() = default;
  explicit Client(ClientOptions options) : options_(options) {}

  const ClientOptions& options() const { return options_; }

  PageResult query_page(const Endpoint& endpoint, const TriplePattern& pattern,
                        const PageRequest& page = {}) const;

  // Fetches every page, following Link rel="next" (or the X-Total-Count
  // arithmetic when a server sends no Link header).
  std::vector<Triple> query_all(const Endpoint& endpoint,
                                const TriplePattern& pattern,
                                std::uint64_t page_size = kDefaultPageSize) const;

 private:
  PageResult fetch(const std::string& url, const PageRequest& requested) const;

  ClientOptions options_;
};

// Target of the first Link entry with the given rel, if any.
std::optional<std::string> find_link(std::string_view header,
                                     std::string_view rel);

}  // namespace restpark
