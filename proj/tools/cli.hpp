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

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <variant>
#include <string>
#include <vector>

namespace restpark::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // transport, protocol, plan errors
  kUsage = 2,    // bad flags, unreadable data file
  kBind = 3,     // serve could not bind
};

enum class Command { serve, query, demo };

struct CliConfig {
  Command command = Command::serve;

  // serve
  std::string data_file;
  std::string bind_address = "127.0.0.1:8080";
  std::string mount_prefix;
  std::size_t threads = 32;
  bool strict = false;

  // query; demo uses `endpoint_overrides` instead
  std::string endpoint;
  std::optional<std::string> subject;
  std::optional<std::string> predicate;
  std::optional<std::string> object;
  std::optional<std::uint64_t> page;
  std::uint64_t page_size = 100;
  std::optional<std::size_t> max_pages;

  // demo
  std::string plan_file;
  std::map<std::string, std::string> endpoint_overrides;
  std::size_t parallelism = 4;
  std::string format = "both";  // table | jsonl | both
};

struct ServeHooks {
  // Called once the socket is bound, with the bound port.
  std::function<void(int)> on_listening;
  // Serving stops once this becomes true.
  const std::atomic<bool>* stop = nullptr;
};

// Parses argv-style arguments (without the program name). Returns the exit
// code to use when parsing ends the run (help or usage error).
std::variant<CliConfig, int> parse_args(const std::vector<std::string>& args,
                                        std::ostream& out, std::ostream& err);

int cmd_serve(const CliConfig& config, std::ostream& err,
              const ServeHooks& hooks = {});
int cmd_query(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_demo(const CliConfig& config, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const ServeHooks& hooks = {});

}  // namespace restpark::cli
