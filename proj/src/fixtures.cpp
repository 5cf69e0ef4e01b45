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

#include "restpark/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "restpark/federation.hpp"
#include "restpark/ntriples.hpp"
#include "restpark/triple_store.hpp"
#include "restpark/vocab.hpp"

namespace restpark::fixtures {

namespace {

Term iri(std::string_view s) { return Term::iri(std::string(s)); }

TripleStore load(const std::filesystem::path& dir, const std::string& name,
                 std::size_t& count, std::vector<std::string>& checks) {
  const auto path = dir / (name + ".nt");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError(name + ".readable", "cannot read " + path.string());
  checks.push_back(name + ".readable");
  std::ostringstream buffer;
  buffer << in.rdbuf();

  ntriples::ParseReport report;
  try {
    report = ntriples::parse_document(buffer.str(), true);
  } catch (const ntriples::SyntaxError& e) {
    throw FixtureError(name + ".strict_parse", e.what());
  }
  checks.push_back(name + ".strict_parse");

  count = report.triples.size();
  if (count < 20 || count > 60) {
    throw FixtureError(name + ".size",
                       std::to_string(count) + " triples, expected 20-60");
  }
  checks.push_back(name + ".size");
  return TripleStore(std::move(report.triples));
}

void require(bool ok, std::string name, const std::string& detail,
             std::vector<std::string>& checks) {
  if (!ok) throw FixtureError(std::move(name), detail);
  checks.push_back(std::move(name));
}

}  // namespace

FixtureReport validate_fixtures(const std::filesystem::path& dir) {
  using namespace vocab;
  FixtureReport report;
  auto& checks = report.checks;

  const TripleStore linkedmdb = load(dir, "linkedmdb", report.linkedmdb_triples, checks);
  const TripleStore dbpedia = load(dir, "dbpedia", report.dbpedia_triples, checks);
  const TripleStore dblp = load(dir, "dblp", report.dblp_triples, checks);

  // linkedmdb
  require(linkedmdb.count({iri(kFilm675), {}, {}}) > 0, "linkedmdb.film_675",
          "no triples with subject <" + std::string(kFilm675) + ">", checks);

  const auto names = linkedmdb.match({iri(kFilm675), iri(kMovieActorName), {}});
  const Term shatner = Term::literal("William Shatner");
  const bool has_literals = std::all_of(names.begin(), names.end(), [](const Triple& t) {
    return t.object().is_literal();
  });
  require(names.size() >= 3 && has_literals &&
              std::any_of(names.begin(), names.end(),
                          [&](const Triple& t) { return t.object() == shatner; }),
          "linkedmdb.actor_names",
          "film 675 needs >= 3 actor-name literals including \"William Shatner\"",
          checks);

  require(linkedmdb.count({{}, iri(kMovieActorName),
                           Term::literal("William  Shatner")}) > 0,
          "linkedmdb.variant_actor",
          "missing the double-space \"William  Shatner\" actor name", checks);

  // dbpedia
  const auto fellows = dbpedia.match({{}, iri(kDctermsSubject), iri(kBcsFellows)});
  require(fellows.size() >= 2 &&
              std::any_of(fellows.begin(), fellows.end(),
                          [](const Triple& t) {
                            return t.subject() == iri(kDbpediaTimBernersLee);
                          }),
          "dbpedia.bcs_fellows",
          "needs >= 2 BCS Fellows including <" +
              std::string(kDbpediaTimBernersLee) + ">",
          checks);

  const auto same_as = dbpedia.match({iri(kDbpediaTimBernersLee), iri(kOwlSameAs), {}});
  require(std::any_of(same_as.begin(), same_as.end(),
                      [](const Triple& t) {
                        return federation::has_authority(t.object(), kDblpAuthority);
                      }),
          "dbpedia.tim_sameas_dblp",
          "Tim Berners-Lee needs an owl:sameAs link into " +
              std::string(kDblpAuthority),
          checks);
  require(std::any_of(same_as.begin(), same_as.end(),
                      [](const Triple& t) {
                        return t.object().is_iri() &&
                               !federation::has_authority(t.object(), kDblpAuthority);
                      }),
          "dbpedia.tim_sameas_distractor",
          "Tim Berners-Lee needs a non-DBLP owl:sameAs link", checks);

  // Every DBpedia resource named like a film 675 actor carries a birth date.
  std::size_t dated = 0;
  bool all_dated = true;
  for (const auto& name : names) {
    for (const auto& hit : dbpedia.match({{}, {}, name.object()})) {
      const auto dates = dbpedia.match({hit.subject(), iri(kDboBirthDate), {}});
      const bool ok = !dates.empty() && dates.front().object().is_literal();
      all_dated = all_dated && ok;
      dated += ok ? 1 : 0;
    }
  }
  require(all_dated && dated > 0 &&
              dbpedia.count({iri(kDbpediaWilliamShatner), iri(kDboBirthDate), {}}) > 0,
          "dbpedia.actor_birth_dates",
          "actor resources matched by name need dbo:birthDate literals", checks);

  // dblp
  const auto papers = dblp.match({iri(kDblpTimBernersLee), iri(kFoafMade), {}});
  require(!papers.empty() &&
              std::all_of(papers.begin(), papers.end(),
                          [&](const Triple& t) {
                            return dblp.count({t.object(), iri(kDcTitle), {}}) > 0;
                          }),
          "dblp.tim_papers",
          "<" + std::string(kDblpTimBernersLee) + "> needs titled papers", checks);

  return report;
}

}  // namespace restpark::fixtures
