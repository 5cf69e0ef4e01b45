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

// Random RDF data and small helpers shared by the test suites.

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "restpark/federation.hpp"
#include "restpark/term.hpp"

namespace restpark::testing {

inline std::filesystem::path source_dir() { return RESTPARK_SOURCE_DIR; }
inline std::filesystem::path fixtures_dir() { return source_dir() / "fixtures"; }
inline std::filesystem::path plans_dir() { return source_dir() / "plans"; }

std::string read_file(const std::filesystem::path& path);

/// Generates terms from small pools so that random patterns hit real data.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed, int pool = 12) : rng_(seed), pool_(pool) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Term iri();
  Term blank();
  Term literal();
  // Exotic lexical forms: quotes, backslashes, control chars, non-ASCII.
  std::string nasty_text();
  Term subject();
  Term predicate();
  Term object();
  Term any_term();
  Triple triple();
  std::vector<Triple> triples(std::size_t n);
  // Random shape; bound positions are taken from `source` when given, so
  // the pattern matches something, or are random terms otherwise.
  TriplePattern pattern(const Triple* source);

 private:
  std::mt19937_64 rng_;
  int pool_;
};

// Evaluates a plan by nested loops over whole datasets, keyed by endpoint
// base URL, and returns the distinct projected rows.
std::set<std::vector<Term>> brute_force_plan(
    const federation::QueryPlan& plan,
    const std::map<std::string, std::vector<Triple>>& data_by_url);

// A loopback port with nothing listening on it.
int closed_port();

}  // namespace restpark::testing
