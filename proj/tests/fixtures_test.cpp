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

#include <fstream>

#include "restpark/fixtures.hpp"
#include "support.hpp"

using namespace restpark;
namespace fs = std::filesystem;

namespace {

class ScratchDir {
 public:
  ScratchDir() : path_(fs::temp_directory_path() / ("restpark-fixtures-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  void copy_shipped() {
    for (const char* name : {"linkedmdb.nt", "dbpedia.nt", "dblp.nt"}) {
      fs::copy_file(restpark::testing::fixtures_dir() / name, path_ / name);
    }
  }
  void replace_all(const std::string& file, const std::string& from, const std::string& to) {
    auto text = restpark::testing::read_file(path_ / file);
    for (std::size_t pos = 0; (pos = text.find(from, pos)) != std::string::npos; pos += to.size()) {
      text.replace(pos, from.size(), to);
    }
    std::ofstream(path_ / file, std::ios::binary | std::ios::trunc) << text;
  }
  void drop_lines_containing(const std::string& file, const std::string& needle) {
    const auto text = restpark::testing::read_file(path_ / file);
    std::string kept;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      const auto line = text.substr(start, end - start);
      if (line.find(needle) == std::string::npos) kept += line + "\n";
      start = end + 1;
    }
    std::ofstream(path_ / file, std::ios::binary | std::ios::trunc) << kept;
  }

 private:
  fs::path path_;
};

std::string failed_invariant(const fs::path& dir) {
  try {
    fixtures::validate_fixtures(dir);
  } catch (const fixtures::FixtureError& e) {
    return e.invariant();
  }
  return "<valid>";
}

}  // namespace

TEST(ValidateFixtures, ShippedFixturesPass) {
  const auto report = fixtures::validate_fixtures(restpark::testing::fixtures_dir());
  for (std::size_t n : {report.linkedmdb_triples, report.dbpedia_triples, report.dblp_triples}) {
    EXPECT_GE(n, 20u);
    EXPECT_LE(n, 60u);
  }
  for (const char* check : {"linkedmdb.film_675", "linkedmdb.variant_actor", "dbpedia.bcs_fellows",
                            "dbpedia.tim_sameas_dblp", "dblp.tim_papers"}) {
    EXPECT_NE(std::find(report.checks.begin(), report.checks.end(), check), report.checks.end()) << check;
  }
}

TEST(ValidateFixtures, MissingFilm) {
  ScratchDir dir;
  dir.copy_shipped();
  // Renaming keeps the file size, so only the film invariant breaks.
  dir.replace_all("linkedmdb.nt", "resource/film/675>", "resource/film/9675>");
  EXPECT_EQ(failed_invariant(dir.path()), "linkedmdb.film_675");
}

TEST(ValidateFixtures, MissingSameAs) {
  ScratchDir dir;
  dir.copy_shipped();
  dir.drop_lines_containing("dbpedia.nt", "owl#sameAs> <http://www4.wiwiss.fu-berlin.de/dblp/Tim_Berners-Lee>");
  EXPECT_EQ(failed_invariant(dir.path()), "dbpedia.tim_sameas_dblp");
}

TEST(ValidateFixtures, MalformedLine) {
  ScratchDir dir;
  dir.copy_shipped();
  std::ofstream(dir.path() / "dblp.nt", std::ios::app) << "<http://x.org/s> <http://x.org/p> .\n";
  EXPECT_EQ(failed_invariant(dir.path()), "dblp.strict_parse");
}

TEST(ValidateFixtures, EmptyDirectory) {
  ScratchDir dir;
  EXPECT_EQ(failed_invariant(dir.path()), "linkedmdb.readable");
}
