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

#include <gtest/gtest.h>

#include <httplib.h>

#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "restpark/ntriples.hpp"
#include "restpark/server.hpp"
#include "restpark/vocab.hpp"
#include "support.hpp"

using namespace restpark;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return (restpark::testing::fixtures_dir() / (name + ".nt")).string();
}

// Runs `serve` on a background thread until destroyed.
class ServeProcess {
 public:
  explicit ServeProcess(std::vector<std::string> args) {
    auto port = bound_.get_future();
    cli::ServeHooks hooks;
    hooks.on_listening = [this](int p) { bound_.set_value(p); };
    hooks.stop = &stop_;
    thread_ = std::thread([this, args = std::move(args), hooks] {
      code_ = cli::run(args, out_, err_, hooks);
      if (code_ != 0) {
        try {
          bound_.set_value(-1);
        } catch (const std::future_error&) {
        }
      }
    });
    port_ = port.get();
  }
  ~ServeProcess() {
    stop_ = true;
    thread_.join();
  }
  int port() const { return port_; }
  std::string base() const { return "http://127.0.0.1:" + std::to_string(port_); }

 private:
  std::promise<int> bound_;
  std::atomic<bool> stop_{false};
  std::ostringstream out_, err_;
  int code_ = -1;
  int port_ = -1;
  std::thread thread_;
};

}  // namespace

TEST(CliArgs, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"serve"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"query"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"query", "--endpoint", "http://x.org", "--page", "1", "--max-pages", "2"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"demo", "--plan", "p.json", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
}

TEST(CliServe, MissingDataFile) {
  const auto r = run_cli({"serve", "--data", "/nonexistent/data.nt", "--bind", "127.0.0.1:0"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliServe, StrictRejectsMalformedFile) {
  const auto path = std::filesystem::temp_directory_path() / "restpark-cli-bad.nt";
  std::ofstream(path) << "<http://x.org/s> <http://x.org/p> \"o\" .\nbroken line\n";
  EXPECT_EQ(run_cli({"serve", "--strict", "--data", path.string(), "--bind", "127.0.0.1:0"}).code, cli::kUsage);
  std::filesystem::remove(path);
}

TEST(CliServe, BindFailure) {
  Server blocker(std::make_shared<const TripleStore>(std::vector<Triple>{}));
  const int port = blocker.bind("127.0.0.1", 0);
  blocker.start();
  const auto r = run_cli({"serve", "--data", fixture("dblp"), "--bind", "127.0.0.1:" + std::to_string(port)});
  EXPECT_EQ(r.code, cli::kBind);
}

TEST(CliServe, ServesFixtureWithMount) {
  ServeProcess serve({"serve", "--data", fixture("dblp"), "--bind", "127.0.0.1:0", "--mount", "/dblp"});
  ASSERT_GT(serve.port(), 0);
  httplib::Client http("127.0.0.1", serve.port());
  http.set_url_encode(false);
  const auto res = http.Get("/dblp/restpark?subject=http%3A%2F%2Fwww4.wiwiss.fu-berlin.de%2Fdblp%2FTim_Berners-Lee");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("X-Total-Count"), "9");
  EXPECT_EQ(http.Get("/restpark")->status, 404);
}

TEST(CliQuery, PrintsNTriples) {
  ServeProcess serve({"serve", "--data", fixture("dblp"), "--bind", "127.0.0.1:0", "--mount", "/dblp"});
  const auto r = run_cli({"query", "--endpoint", serve.base() + "/dblp", "--subject", std::string(vocab::kDblpTimBernersLee),
                          "--predicate", std::string(vocab::kFoafMade), "--page-size", "3"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto parsed = ntriples::parse_document(r.out, true);
  EXPECT_EQ(parsed.triples.size(), 7u);

  const auto one_page = run_cli({"query", "--endpoint", serve.base() + "/dblp", "--subject",
                                 std::string(vocab::kDblpTimBernersLee), "--page", "3", "--page-size", "3"});
  ASSERT_EQ(one_page.code, cli::kOk) << one_page.err;
  EXPECT_EQ(ntriples::parse_document(one_page.out, true).triples.size(), 3u);

  const auto literal = run_cli({"query", "--endpoint", serve.base() + "/dblp", "--object", "\"Tim Berners-Lee\""});
  ASSERT_EQ(literal.code, cli::kOk) << literal.err;
  EXPECT_EQ(ntriples::parse_document(literal.out, true).triples.size(), 1u);
}

TEST(CliQuery, Failures) {
  const int port = restpark::testing::closed_port();
  EXPECT_EQ(run_cli({"query", "--endpoint", "http://127.0.0.1:" + std::to_string(port)}).code, cli::kFailure);
  EXPECT_EQ(run_cli({"query", "--endpoint", "not a url"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"query", "--endpoint", "http://127.0.0.1:1", "--subject", "relative"}).code, cli::kUsage);
}

TEST(CliDemo, StarTrekTable) {
  ServeProcess linkedmdb({"serve", "--data", fixture("linkedmdb"), "--bind", "127.0.0.1:0"});
  ServeProcess dbpedia({"serve", "--data", fixture("dbpedia"), "--bind", "127.0.0.1:0"});
  const auto r = run_cli({"demo", "--plan", (restpark::testing::plans_dir() / "startrek-birthdays.json").string(),
                          "--endpoint", "linkedmdb=" + linkedmdb.base(), "--endpoint", "dbpedia=" + dbpedia.base()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("?name"), std::string::npos);
  EXPECT_NE(r.out.find("(3 rows)"), std::string::npos);
  EXPECT_NE(r.out.find(R"({"name":"\"William Shatner\"","birthDate":"\"1931-03-22\"^^<http://www.w3.org/2001/XMLSchema#date>"})"),
            std::string::npos)
      << r.out;
}

TEST(CliDemo, PlanErrors) {
  const auto path = std::filesystem::temp_directory_path() / "restpark-cli-plan.json";
  std::ofstream(path) << R"({"steps":[{"kind":"extend","endpoint":"http://127.0.0.1:1","subject":"?a","object":"?b"}],"output":["a"]})";
  const auto r = run_cli({"demo", "--plan", path.string()});
  EXPECT_EQ(r.code, cli::kFailure);
  EXPECT_NE(r.err.find("steps[0]"), std::string::npos) << r.err;
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli({"demo", "--plan", "/nonexistent.json"}).code, cli::kUsage);
}
