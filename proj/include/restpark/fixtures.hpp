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
#include <filesystem>
#include <string>
#include <vector>

#include "restpark/error.hpp"

namespace restpark::fixtures {

class FixtureError : public Error {
 public:
  FixtureError(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  // Short name of the violated check, e.g. "linkedmdb.film_675".
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

struct FixtureReport {
  std::size_t linkedmdb_triples = 0;
  std::size_t dbpedia_triples = 0;
  std::size_t dblp_triples = 0;
  std::vector<std::string> checks;  // names of passed checks, in order
};

/// Checks linkedmdb.nt, dbpedia.nt and dblp.nt in `directory`: strict
/// parsing, 20-60 triples each, and the content both demo workflows rely on.
/// Throws FixtureError naming the first violated check.
FixtureReport validate_fixtures(const std::filesystem::path& directory);

}  // namespace restpark::fixtures
