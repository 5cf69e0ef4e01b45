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

#include "restpark/server.hpp"

#include <httplib.h>

#include <thread>

#include "restpark/http_service.hpp"

namespace restpark {

struct Server::Impl {
  std::shared_ptr<const TripleStore> store;
  ServiceOptions service;
  std::size_t threads;
  httplib::Server http;
  std::string host;
  int port = -1;
  RequestObserver observer;
  std::thread worker;
};

Server::Server(std::shared_ptr<const TripleStore> store, ServerOptions options)
    : impl_(std::make_unique<Impl>()) {
  impl_->store = std::move(store);
  impl_->service.mount_prefix = normalize_mount_prefix(options.mount_prefix);
  impl_->threads = std::max<std::size_t>(1, options.threads);

  const std::size_t threads = impl_->threads;
  impl_->http.new_task_queue = [threads] {
    return new httplib::ThreadPool(threads);
  };
  // httplib defaults to SO_REUSEPORT, which would let a second server share
  // the port instead of failing to bind.
  impl_->http.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  impl_->http.set_pre_routing_handler(
      [impl = impl_.get()](const httplib::Request& req,
                           httplib::Response& res) {
        if (impl->observer) impl->observer(req.method, req.target);
        const auto q = req.target.find('?');
        const std::string_view raw_query =
            q == std::string::npos ? std::string_view{}
                                   : std::string_view(req.target).substr(q + 1);
        HttpResponseSpec spec = handle_request(*impl->store, req.method,
                                               req.path, raw_query,
                                               impl->service);
        res.status = spec.status;
        std::string content_type;
        for (auto& [name, value] : spec.headers) {
          if (name == "Content-Type") {
            content_type = value;
          } else {
            res.set_header(name, value);
          }
        }
        res.set_content(std::move(spec.body), content_type);
        return httplib::Server::HandlerResponse::Handled;
      });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->http.bind_to_any_port(host)
                              : (impl_->http.bind_to_port(host, port) ? port
                                                                      : -1);
  if (bound < 0) {
    throw BindError("cannot bind " + host + ":" + std::to_string(port));
  }
  impl_->host = host;
  impl_->port = bound;
  return bound;
}

void Server::listen() {
  if (impl_->port < 0) throw Error("Server::listen called before bind");
  impl_->http.listen_after_bind();
}

void Server::start() {
  if (impl_->port < 0) throw Error("Server::start called before bind");
  impl_->worker = std::thread([this] { impl_->http.listen_after_bind(); });
  impl_->http.wait_until_ready();
}

void Server::stop() {
  impl_->http.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

int Server::port() const { return impl_->port; }

std::string Server::base_url() const {
  return "http://" + impl_->host + ":" + std::to_string(impl_->port) +
         impl_->service.mount_prefix;
}

void Server::set_request_observer(RequestObserver observer) {
  impl_->observer = std::move(observer);
}

}  // namespace restpark
