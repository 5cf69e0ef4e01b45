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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "restpark/client.hpp"
#include "restpark/federation.hpp"
#include "restpark/http_service.hpp"
#include "restpark/ntriples.hpp"
#include "restpark/server.hpp"
#include "restpark/triple_store.hpp"

namespace restpark::cli {

namespace {

constexpr std::size_t kMaxLoggedErrors = 20;

// Display width in code points.
std::size_t width(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

bool split_bind(const std::string& bind, std::string& host, int& port) {
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos || colon == 0) return false;
  host = bind.substr(0, colon);
  if (host.size() > 2 && host.front() == '[' && host.back() == ']') {
    host = host.substr(1, host.size() - 2);
  }
  try {
    std::size_t used = 0;
    port = std::stoi(bind.substr(colon + 1), &used);
    return used == bind.size() - colon - 1 && port >= 0 && port <= 65535;
  } catch (const std::exception&) {
    return false;
  }
}

void print_table(const federation::BindingTable& table, std::ostream& out) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> widths;
  for (const auto& c : table.columns()) widths.push_back(width(c) + 1);
  for (const auto& row : table.rows()) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(format_term(row[i]));
      widths[i] = std::max(widths[i], width(line.back()));
    }
  }
  const auto emit = [&](const std::vector<std::string>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << values[i];
      if (i + 1 < values.size()) {
        out << std::string(widths[i] - width(values[i]) + 2, ' ');
      }
    }
    out << '\n';
  };
  std::vector<std::string> header;
  for (const auto& c : table.columns()) header.push_back("?" + c);
  emit(header);
  std::vector<std::string> rule;
  for (auto w : widths) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& line : cells) emit(line);
  out << "(" << table.size() << (table.size() == 1 ? " row" : " rows") << ")\n";
}

void print_json_lines(const federation::BindingTable& table, std::ostream& out) {
  for (const auto& row : table.rows()) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.columns()[i]] = format_term(row[i]);
    }
    out << obj.dump() << '\n';
  }
}

}  // namespace

std::variant<CliConfig, int> parse_args(const std::vector<std::string>& args,
                                        std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Serve and query RDF triple patterns over HTTP", "restpark"};
  app.require_subcommand(1);

  auto* serve = app.add_subcommand("serve", "Serve an N-Triples file at /restpark");
  serve->add_option("--data", config.data_file, "N-Triples file to serve")->required();
  serve->add_option("--bind", config.bind_address, "host:port to listen on")
      ->capture_default_str();
  serve->add_option("--mount", config.mount_prefix,
                    "Path prefix, e.g. /dblp serves /dblp/restpark");
  serve->add_option("--threads", config.threads, "Worker threads")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  serve->add_flag("--strict", config.strict, "Refuse files with malformed lines");

  auto* query = app.add_subcommand("query", "Query an endpoint, print N-Triples");
  query->add_option("--endpoint", config.endpoint,
                    "Base URL, e.g. http://127.0.0.1:8080")
      ->required();
  query->add_option("--subject", config.subject, "Subject IRI or _:label");
  query->add_option("--predicate", config.predicate, "Predicate IRI");
  query->add_option("--object", config.object,
                    "Object IRI, _:label, or quoted literal such as '\"x\"@en'");
  auto* page = query->add_option("--page", config.page, "Fetch only this page")
                   ->check(CLI::PositiveNumber);
  query->add_option("--page-size", config.page_size, "Triples per request")
      ->check(CLI::Range(std::uint64_t{1}, kMaxPageSize))
      ->capture_default_str();
  auto* max_pages = query->add_option("--max-pages", config.max_pages,
                                      "Stop after this many pages")
                        ->check(CLI::PositiveNumber);
  page->excludes(max_pages);

  auto* demo = app.add_subcommand("demo", "Run a federated query plan");
  demo->add_option("--plan", config.plan_file, "Plan JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  std::vector<std::string> overrides;
  demo->add_option("--endpoint", overrides,
                   "Override a named plan endpoint: name=URL (repeatable)");
  demo->add_option("--parallelism", config.parallelism,
                   "Concurrent requests per extend step")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  demo->add_option("--format", config.format, "Output: table, jsonl or both")
      ->check(CLI::IsMember({"table", "jsonl", "both"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw CLI::ValidationError("--endpoint", "expected name=URL, got '" + o + "'");
      }
      config.endpoint_overrides[o.substr(0, eq)] = o.substr(eq + 1);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "restpark: " << e.what() << "\n";
    const auto* sub = serve->parsed() ? serve : query->parsed() ? query
                    : demo->parsed()  ? demo  : nullptr;
    err << (sub ? sub->help() : app.help());
    return kUsage;
  }

  config.command = serve->parsed() ? Command::serve
                   : query->parsed() ? Command::query
                                     : Command::demo;
  return config;
}

int cmd_serve(const CliConfig& config, std::ostream& err, const ServeHooks& hooks) {
  std::string host;
  int port = 0;
  if (!split_bind(config.bind_address, host, port)) {
    err << "restpark: --bind expects host:port, got '" << config.bind_address << "'\n";
    return kUsage;
  }
  std::string mount;
  try {
    mount = normalize_mount_prefix(config.mount_prefix);
  } catch (const Error& e) {
    err << "restpark: " << e.what() << "\n";
    return kUsage;
  }

  std::ifstream in(config.data_file, std::ios::binary);
  if (!in) {
    err << "restpark: cannot read " << config.data_file << "\n";
    return kUsage;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  ntriples::ParseReport report;
  try {
    report = ntriples::parse_document(buffer.str(), config.strict);
  } catch (const ntriples::SyntaxError& e) {
    err << "restpark: " << config.data_file << ": " << e.what() << "\n";
    return kUsage;
  }
  for (std::size_t i = 0; i < report.errors.size() && i < kMaxLoggedErrors; ++i) {
    err << config.data_file << ":" << report.errors[i].line << ": skipped: "
        << report.errors[i].message << "\n";
  }
  if (report.errors.size() > kMaxLoggedErrors) {
    err << "... " << report.errors.size() - kMaxLoggedErrors
        << " more malformed lines\n";
  }
  const std::size_t parsed = report.triples.size();
  auto store = std::make_shared<const TripleStore>(std::move(report.triples));
  err << "loaded " << parsed << " triples (" << store->size() << " distinct, "
      << report.errors.size() << " malformed lines skipped) from "
      << config.data_file << "\n";

  Server server(store, {mount, config.threads});
  int bound = 0;
  try {
    bound = server.bind(host, port);
  } catch (const BindError& e) {
    err << "restpark: " << e.what() << "\n";
    return kBind;
  }
  err << "serving " << server.base_url() << kResourcePath << "\n" << std::flush;

  std::atomic<bool> done{false};
  std::thread watcher([&] {
    while (!done) {
      if (hooks.stop && hooks.stop->load()) server.stop();
      std::this_thread::sleep_for(std::chrono::milliseconds(50));
    }
  });
  if (hooks.on_listening) hooks.on_listening(bound);
  server.listen();
  done = true;
  watcher.join();
  err << "stopped\n";
  return kOk;
}

int cmd_query(const CliConfig& config, std::ostream& out, std::ostream& err) {
  Endpoint endpoint;
  TriplePattern pattern;
  try {
    endpoint = Endpoint::parse(config.endpoint);
    if (config.subject) pattern.subject = parse_param_term(Position::subject, *config.subject);
    if (config.predicate) {
      pattern.predicate = parse_param_term(Position::predicate, *config.predicate);
    }
    if (config.object) pattern.object = parse_param_term(Position::object, *config.object);
  } catch (const Error& e) {
    err << "restpark: " << e.what() << "\n";
    return kUsage;
  }

  ClientOptions options;
  if (config.max_pages) options.max_pages = *config.max_pages;
  const Client client(options);
  try {
    std::vector<Triple> triples;
    if (config.page) {
      triples = client.query_page(endpoint, pattern,
                                  PageRequest(*config.page, config.page_size))
                    .triples;
    } else {
      triples = client.query_all(endpoint, pattern, config.page_size);
    }
    out << ntriples::serialize_document(triples) << std::flush;
  } catch (const ClientError& e) {
    err << "restpark: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_demo(const CliConfig& config, std::ostream& out, std::ostream& err) {
  federation::BindingTable table;
  try {
    const auto plan = federation::load_plan(config.plan_file, config.endpoint_overrides);
    federation::validate_plan(plan);
    const Client client;
    table = federation::run_plan(plan, client, {config.parallelism, kDefaultPageSize});
  } catch (const federation::PlanError& e) {
    err << "restpark: " << config.plan_file << ": " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    err << "restpark: " << e.what() << "\n";
    return kFailure;
  }
  if (config.format != "jsonl") print_table(table, out);
  if (config.format == "both") out << '\n';
  if (config.format != "table") print_json_lines(table, out);
  out << std::flush;
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ServeHooks& hooks) {
  auto parsed = parse_args(args, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  const CliConfig& config = std::get<CliConfig>(parsed);
  switch (config.command) {
    case Command::serve: return cmd_serve(config, err, hooks);
    case Command::query: return cmd_query(config, out, err);
    case Command::demo: return cmd_demo(config, out, err);
  }
  return kUsage;
}

}  // namespace restpark::cli
