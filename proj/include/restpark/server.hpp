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
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "restpark/error.hpp"
#include "restpark/triple_store.hpp"

namespace restpark {

class BindError : public Error {
 public:
  using Error::Error;
};

struct ServerOptions {
  std::string mount_prefix;
  std::size_t threads = 32;
};

/// HTTP/1.1 front end for handle_request over a shared immutable store.
class Server {
 public:
  using RequestObserver =
      std::function<void(std::string_view method, std::string_view target)>;

  explicit Server(std::shared_ptr<const TripleStore> store,
                  ServerOptions options = {});
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds the listening socket; port 0 picks a free port. Returns the bound
  // port.
  int bind(const std::string& host, int port);

  // Serves until stop() is called. Requires bind().
  void listen();
  // Serves on a background thread. Requires bind().
  void start();
  void stop();

  int port() const;
  // "http://host:port<mount>", suitable as a client Endpoint.
  std::string base_url() const;

  // Called for every request before it is handled, from server threads.
  // Must be set before serving starts.
  void set_request_observer(RequestObserver observer);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace restpark
