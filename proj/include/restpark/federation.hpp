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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "restpark/client.hpp"
#include "restpark/error.hpp"
#include "restpark/term.hpp"

namespace restpark::federation {

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// Empty slot: wildcard whose value is not kept.
using Slot = std::variant<std::monostate, Term, Variable>;

struct PatternTemplate {
  Slot subject;
  Slot predicate;
  Slot object;
};

/// Runs one query and joins every result onto every existing row that agrees
/// on shared variables. As the first step it seeds the table.
struct FetchStep {
  Endpoint endpoint;
  PatternTemplate pattern;
};

/// Runs one query per existing row with that row's bindings substituted.
/// Rows whose query returns nothing are dropped.
struct ExtendStep {
  Endpoint endpoint;
  PatternTemplate pattern;
};

/// Keeps rows whose variable is an IRI with the given authority.
struct FilterHostStep {
  std::string variable;
  std::string authority;
};

using PlanStep = std::variant<FetchStep, ExtendStep, FilterHostStep>;

struct QueryPlan {
  std::vector<PlanStep> steps;
  std::vector<std::string> output;
};

class PlanError : public Error {
 public:
  PlanError(std::optional<std::size_t> step, const std::string& message)
      : Error(step ? "steps[" + std::to_string(*step) + "]: " + message
                   : message),
        step_(step) {}
  // 0-based index of the failing step; empty for plan-level problems.
  std::optional<std::size_t> step() const { return step_; }

 private:
  std::optional<std::size_t> step_;
};

class BindingTable {
 public:
  using Row = std::vector<Term>;

  BindingTable() = default;
  explicit BindingTable(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  std::optional<std::size_t> column_index(std::string_view name) const;
  const Term& at(std::size_t row, std::string_view column) const;

  // Row values in column order.
  void add_row(Row row);
  // Sorts rows and removes duplicates.
  void canonicalize();

  friend bool operator==(const BindingTable&, const BindingTable&) = default;

 private:
  std::vector<std::string> columns_;
  std::vector<Row> rows_;
};

struct RunOptions {
  // Concurrent requests within one extend step.
  std::size_t parallelism = 4;
  std::uint64_t page_size = kDefaultPageSize;
};

// Throws PlanError for unbound variables, extend steps without a bound
// variable, bad variable names or an empty output.
void validate_plan(const QueryPlan& plan);

/// Validates, then executes the steps in order. The result is projected to
/// plan.output, sorted and deduplicated. Client failures surface as PlanError
/// carrying the step index.
BindingTable run_plan(const QueryPlan& plan, const Client& client,
                      const RunOptions& options = {});

// Distinct values of one column, in term order.
std::vector<Term> project_terms(const BindingTable& table,
                                std::string_view variable);

// Authority (host[:port], no userinfo) of a hierarchical IRI.
std::optional<std::string> iri_authority(std::string_view iri);

// Host compared case-insensitively, port exactly.
bool has_authority(const Term& term, std::string_view authority);

// IRIs from `terms` whose authority equals `authority`; literals and blank
// nodes are dropped.
std::vector<Term> filter_host(std::span<const Term> terms,
                              std::string_view authority);

/// Reads a plan document:
///
///   {"endpoints": {"dbpedia": "http://127.0.0.1:8082"},
///    "steps": [{"kind": "fetch", "endpoint": "dbpedia",
///               "predicate": "http://purl.org/dc/terms/subject",
///               "subject": "?fellow"}, ...],
///    "output": ["fellow"]}
///
/// Slot strings starting with '?' are variables; others use the query
/// parameter syntax. `endpoint` is a name from "endpoints" or a URL.
/// `overrides` replaces or adds named endpoints.
QueryPlan parse_plan(std::string_view json,
                     const std::map<std::string, std::string>& overrides = {});
QueryPlan load_plan(const std::filesystem::path& path,
                    const std::map<std::string, std::string>& overrides = {});

}  // namespace restpark::federation
