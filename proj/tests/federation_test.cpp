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

#include <set>

#include "restpark/federation.hpp"
#include "restpark/ntriples.hpp"
#include "restpark/server.hpp"
#include "restpark/vocab.hpp"
#include "support.hpp"

using namespace restpark;
using namespace restpark::federation;

namespace {

Term iri(std::string_view s) { return Term::iri(std::string(s)); }

std::vector<Triple> fixture_triples(const std::string& name) {
  const auto text = restpark::testing::read_file(restpark::testing::fixtures_dir() / (name + ".nt"));
  return ntriples::parse_document(text, true).triples;
}

std::set<std::vector<Term>> as_set(const BindingTable& table) {
  return {table.rows().begin(), table.rows().end()};
}

class Federation : public ::testing::Test {
 protected:
  void SetUp() override {
    start("linkedmdb", "");
    start("dbpedia", "");
    start("dblp", "/dblp");
  }
  void TearDown() override {
    for (auto& s : servers_) s->stop();
  }
  void start(const std::string& name, const std::string& mount) {
    auto triples = fixture_triples(name);
    auto server = std::make_unique<Server>(std::make_shared<const TripleStore>(triples), ServerOptions{mount, 8});
    server->bind("127.0.0.1", 0);
    server->start();
    overrides_[name] = server->base_url();
    data_[server->base_url()] = std::move(triples);
    servers_.push_back(std::move(server));
  }
  QueryPlan plan(const std::string& file, const std::vector<std::string>& names) {
    std::map<std::string, std::string> chosen;
    for (const auto& n : names) chosen[n] = overrides_.at(n);
    return load_plan(restpark::testing::plans_dir() / file, chosen);
  }

  std::vector<std::unique_ptr<Server>> servers_;
  std::map<std::string, std::string> overrides_;
  std::map<std::string, std::vector<Triple>> data_;
  Client client_;
};

}  // namespace

TEST_F(Federation, StarTrekBirthdaysMatchOracle) {
  const QueryPlan p = plan("startrek-birthdays.json", {"linkedmdb", "dbpedia"});
  const BindingTable table = run_plan(p, client_);
  EXPECT_EQ(table.columns(), (std::vector<std::string>{"name", "birthDate"}));
  const auto rows = as_set(table);
  EXPECT_EQ(rows, restpark::testing::brute_force_plan(p, data_));
  const std::vector<Term> shatner{Term::literal("William Shatner"),
                                  Term::literal("1931-03-22", std::nullopt, std::string(vocab::kXsdDate))};
  EXPECT_TRUE(rows.contains(shatner));
  for (const auto& row : rows) EXPECT_NE(row[0], Term::literal("William  Shatner"));
  // Nichelle Nichols carries a language tag in DBpedia, so the literal join misses her.
  for (const auto& row : rows) EXPECT_NE(row[0], Term::literal("Nichelle Nichols"));
  EXPECT_EQ(rows.size(), 3u);
}

TEST_F(Federation, SameAsRecoversVariantSpelling) {
  const std::string json = R"({
    "endpoints": {"linkedmdb": "http://127.0.0.1:1", "dbpedia": "http://127.0.0.1:2"},
    "steps": [
      {"kind": "fetch", "endpoint": "linkedmdb", "subject": "?actor",
       "predicate": "http://data.linkedmdb.org/resource/movie/actor_name", "object": "\"William  Shatner\""},
      {"kind": "extend", "endpoint": "linkedmdb", "subject": "?actor",
       "predicate": "http://www.w3.org/2002/07/owl#sameAs", "object": "?same"},
      {"kind": "extend", "endpoint": "dbpedia", "subject": "?same",
       "predicate": "http://dbpedia.org/ontology/birthDate", "object": "?birthDate"}
    ],
    "output": ["birthDate"]
  })";
  const QueryPlan p = parse_plan(json, {{"linkedmdb", overrides_.at("linkedmdb")}, {"dbpedia", overrides_.at("dbpedia")}});
  const auto rows = as_set(run_plan(p, client_));
  EXPECT_EQ(rows, restpark::testing::brute_force_plan(p, data_));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows.begin()->at(0), Term::literal("1931-03-22", std::nullopt, std::string(vocab::kXsdDate)));
}

TEST_F(Federation, BcsFellowsDblpMatchOracle) {
  const QueryPlan p = plan("bcs-fellows-dblp.json", {"dbpedia", "dblp"});
  for (std::size_t parallelism : {1u, 4u, 16u}) {
    const BindingTable table = run_plan(p, client_, {parallelism, 2});
    const auto rows = as_set(table);
    EXPECT_EQ(rows, restpark::testing::brute_force_plan(p, data_));
    std::set<Term> titles;
    for (const auto& row : rows) {
      EXPECT_TRUE(has_authority(row[1], vocab::kDblpAuthority));
      if (row[0] == iri(vocab::kDbpediaTimBernersLee)) {
        EXPECT_EQ(row[1], iri(vocab::kDblpTimBernersLee));
        titles.insert(row[2]);
      }
    }
    EXPECT_EQ(titles.size(), 7u);
    EXPECT_EQ(project_terms(table, "fellow").size(), 2u);
  }
}

TEST_F(Federation, EmptyFetchGivesEmptyTable) {
  const std::string json = R"({
    "steps": [
      {"kind": "fetch", "endpoint": "http://127.0.0.1:1", "subject": "?s",
       "predicate": "http://example.org/none", "object": "?o"},
      {"kind": "extend", "endpoint": "http://127.0.0.1:1", "subject": "?o", "object": "?x"}
    ],
    "output": ["s", "x"]
  })";
  const QueryPlan p = parse_plan(json);
  QueryPlan local = p;
  std::get<FetchStep>(local.steps[0]).endpoint = Endpoint::parse(overrides_["dbpedia"]);
  std::get<ExtendStep>(local.steps[1]).endpoint = Endpoint::parse(overrides_["dbpedia"]);
  const BindingTable table = run_plan(local, client_);
  EXPECT_TRUE(table.empty());
  EXPECT_EQ(table.columns(), (std::vector<std::string>{"s", "x"}));
}

TEST_F(Federation, TransportFailureNamesStep) {
  QueryPlan p = plan("bcs-fellows-dblp.json", {"dbpedia", "dblp"});
  std::get<ExtendStep>(p.steps[3]).endpoint = Endpoint::parse("http://127.0.0.1:1/dblp");
  try {
    run_plan(p, Client(ClientOptions{std::chrono::seconds(2), 10}));
    FAIL() << "expected PlanError";
  } catch (const PlanError& e) {
    EXPECT_EQ(e.step(), 3u);
    EXPECT_EQ(std::string(e.what()).rfind("steps[3]: ", 0), 0u) << e.what();
  }
}

TEST(PlanValidation, UnboundVariables) {
  const auto fetch = [](const std::string& s, const std::string& o) {
    return R"({"kind":"fetch","endpoint":"http://127.0.0.1:1","subject":")" + s + R"(","object":")" + o + R"("})";
  };
  const auto extend = R"({"kind":"extend","endpoint":"http://127.0.0.1:1","subject":"?q","object":"?r"})";
  try {
    parse_plan(R"({"steps":[)" + fetch("?a", "?b") + "," + extend + R"(],"output":["a"]})");
    FAIL();
  } catch (const PlanError& e) {
    EXPECT_EQ(e.step(), 1u);
  }
  try {
    parse_plan(R"({"steps":[)" + fetch("?a", "?b") + R"(],"output":["zz"]})");
    FAIL();
  } catch (const PlanError& e) {
    EXPECT_FALSE(e.step());
  }
  try {
    parse_plan(R"({"steps":[)" + fetch("?a", "?b") +
               R"(,{"kind":"filter_host","variable":"c","authority":"x.org"}],"output":["a"]})");
    FAIL();
  } catch (const PlanError& e) {
    EXPECT_EQ(e.step(), 1u);
  }
  EXPECT_THROW(parse_plan(R"({"steps":[],"output":["a"],"extra":1})"), PlanError);
  EXPECT_THROW(parse_plan(R"({"steps":[{"kind":"nope"}],"output":["a"]})"), PlanError);
  EXPECT_THROW(parse_plan(R"({"steps":[)" + fetch("?a", "?b") + R"(],"output":[]})"), PlanError);
  EXPECT_THROW(parse_plan("not json"), PlanError);
  EXPECT_THROW(parse_plan(R"({"steps":[)" + fetch("?a", "?b") + R"(],"output":["a"]})", {{"ghost", "http://x"}}),
               PlanError);
}

TEST(PlanValidation, ShippedPlansLoad) {
  const auto a = load_plan(restpark::testing::plans_dir() / "startrek-birthdays.json");
  EXPECT_EQ(a.steps.size(), 3u);
  const auto b = load_plan(restpark::testing::plans_dir() / "bcs-fellows-dblp.json");
  EXPECT_EQ(b.steps.size(), 5u);
  EXPECT_EQ(std::get<FetchStep>(b.steps[0]).endpoint.base_url(), "http://127.0.0.1:8082");
  EXPECT_EQ(std::get<ExtendStep>(b.steps[3]).endpoint.mount_prefix(), "/dblp");
}

TEST(FilterHost, Examples) {
  const std::vector<Term> terms{
      iri(vocab::kDblpTimBernersLee),
      iri("http://www.wikidata.org/entity/Q80"),
      iri("http://WWW4.wiwiss.fu-berlin.de/dblp/x"),
      iri("http://user@www4.wiwiss.fu-berlin.de/dblp/y"),
      iri("http://www4.wiwiss.fu-berlin.de:8080/dblp/z"),
      iri("urn:isbn:123"),
      Term::literal("http://www4.wiwiss.fu-berlin.de/dblp/lit"),
      Term::blank("b"),
  };
  const auto kept = filter_host(terms, vocab::kDblpAuthority);
  EXPECT_EQ(std::set<Term>(kept.begin(), kept.end()), (std::set<Term>{terms[0], terms[2], terms[3]}));
  ASSERT_EQ(kept.size(), 3u);
  for (const auto& t : kept) EXPECT_TRUE(has_authority(t, vocab::kDblpAuthority));
  EXPECT_FALSE(has_authority(terms[4], vocab::kDblpAuthority));
  EXPECT_TRUE(has_authority(terms[4], "www4.wiwiss.fu-berlin.de:8080"));
  EXPECT_EQ(iri_authority("http://a.org:81/x?y#z"), "a.org:81");
  EXPECT_FALSE(iri_authority("urn:x"));
}

TEST(BindingTableTest, CanonicalizeSortsAndDedups) {
  BindingTable t({"a"});
  t.add_row({Term::literal("b")});
  t.add_row({Term::literal("a")});
  t.add_row({Term::literal("b")});
  t.canonicalize();
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.at(0, "a"), Term::literal("a"));
  EXPECT_EQ(project_terms(t, "a").size(), 2u);
  EXPECT_THROW(project_terms(t, "zz"), Error);
}
