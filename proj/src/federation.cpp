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

#include "restpark/federation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace restpark::federation {

namespace {

bool is_valid_variable_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

const Variable* as_variable(const Slot& slot) {
  return std::get_if<Variable>(&slot);
}

std::array<const Slot*, 3> slots_of(const PatternTemplate& t) {
  return {&t.subject, &t.predicate, &t.object};
}

const Term& position(const Triple& t, std::size_t i) {
  return i == 0 ? t.subject() : i == 1 ? t.predicate() : t.object();
}

std::string_view step_kind(const PlanStep& step) {
  if (std::holds_alternative<FetchStep>(step)) return "fetch";
  if (std::holds_alternative<ExtendStep>(step)) return "extend";
  return "filter_host";
}

struct Table {
  std::vector<std::string> columns;
  std::vector<BindingTable::Row> rows;

  std::optional<std::size_t> index(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) return std::nullopt;
    return static_cast<std::size_t>(it - columns.begin());
  }
};

// Variables of `tmpl` not yet in `columns`, in slot order, without repeats.
std::vector<std::string> new_variables(const PatternTemplate& tmpl,
                                       const std::vector<std::string>& columns) {
  std::vector<std::string> out;
  for (const Slot* s : slots_of(tmpl)) {
    if (const Variable* v = as_variable(*s)) {
      if (std::find(columns.begin(), columns.end(), v->name) == columns.end() &&
          std::find(out.begin(), out.end(), v->name) == out.end()) {
        out.push_back(v->name);
      }
    }
  }
  return out;
}

// The request pattern for one row: constants stay, variables bound in `row`
// are substituted, everything else is a wildcard.
TriplePattern instantiate(const PatternTemplate& tmpl, const Table& table,
                          const BindingTable::Row* row) {
  TriplePattern p;
  std::array<std::optional<Term>*, 3> out = {&p.subject, &p.predicate,
                                             &p.object};
  const auto slots = slots_of(tmpl);
  for (std::size_t i = 0; i < 3; ++i) {
    if (const Term* t = std::get_if<Term>(slots[i])) {
      *out[i] = *t;
    } else if (const Variable* v = as_variable(*slots[i]); v && row) {
      if (auto col = table.index(v->name)) *out[i] = (*row)[*col];
    }
  }
  return p;
}

// Values for `fresh` taken from `triple`, or nullopt when a variable that
// occurs twice in the template sees two different terms.
std::optional<BindingTable::Row> extract(const PatternTemplate& tmpl,
                                         const std::vector<std::string>& fresh,
                                         const Triple& triple) {
  std::vector<std::optional<Term>> values(fresh.size());
  const auto slots = slots_of(tmpl);
  for (std::size_t i = 0; i < 3; ++i) {
    const Variable* v = as_variable(*slots[i]);
    if (!v) continue;
    const auto it = std::find(fresh.begin(), fresh.end(), v->name);
    if (it == fresh.end()) continue;
    auto& slot = values[static_cast<std::size_t>(it - fresh.begin())];
    const Term& term = position(triple, i);
    if (slot && *slot != term) return std::nullopt;
    slot = term;
  }
  BindingTable::Row row;
  row.reserve(fresh.size());
  for (auto& v : values) row.push_back(std::move(*v));
  return row;
}

void run_fetch(const FetchStep& step, Table& table, const Client& client,
               const RunOptions& options) {
  const std::vector<std::string> fresh = new_variables(step.pattern, table.columns);
  const TriplePattern pattern = instantiate(step.pattern, table, nullptr);
  std::vector<Triple> triples;
  if (pattern.is_satisfiable()) {
    triples = client.query_all(step.endpoint, pattern, options.page_size);
  }

  // Variables already in the table are join keys.
  std::vector<std::pair<std::size_t, std::size_t>> shared;  // column, slot
  const auto slots = slots_of(step.pattern);
  for (std::size_t i = 0; i < 3; ++i) {
    if (const Variable* v = as_variable(*slots[i])) {
      if (auto col = table.index(v->name)) shared.emplace_back(*col, i);
    }
  }

  std::vector<BindingTable::Row> rows;
  for (const auto& row : table.rows) {
    for (const auto& triple : triples) {
      const bool agrees = std::all_of(shared.begin(), shared.end(), [&](auto cs) {
        return row[cs.first] == position(triple, cs.second);
      });
      if (!agrees) continue;
      auto ext = extract(step.pattern, fresh, triple);
      if (!ext) continue;
      BindingTable::Row joined = row;
      joined.insert(joined.end(), ext->begin(), ext->end());
      rows.push_back(std::move(joined));
    }
  }
  table.columns.insert(table.columns.end(), fresh.begin(), fresh.end());
  table.rows = std::move(rows);
}

void run_extend(const ExtendStep& step, Table& table, const Client& client,
                const RunOptions& options) {
  const std::vector<std::string> fresh = new_variables(step.pattern, table.columns);
  const std::size_t n = table.rows.size();
  std::vector<std::vector<BindingTable::Row>> extensions(n);
  std::vector<std::exception_ptr> errors(n);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        const TriplePattern pattern = instantiate(step.pattern, table, &table.rows[i]);
        if (!pattern.is_satisfiable()) continue;
        for (const auto& triple :
             client.query_all(step.endpoint, pattern, options.page_size)) {
          if (auto ext = extract(step.pattern, fresh, triple)) {
            extensions[i].push_back(std::move(*ext));
          }
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min(std::max<std::size_t>(1, options.parallelism), n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<BindingTable::Row> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& ext : extensions[i]) {
      BindingTable::Row joined = table.rows[i];
      joined.insert(joined.end(), std::make_move_iterator(ext.begin()),
                    std::make_move_iterator(ext.end()));
      rows.push_back(std::move(joined));
    }
  }
  table.columns.insert(table.columns.end(), fresh.begin(), fresh.end());
  table.rows = std::move(rows);
}

void run_filter(const FilterHostStep& step, Table& table) {
  const std::size_t col = *table.index(step.variable);
  std::erase_if(table.rows, [&](const BindingTable::Row& row) {
    return !has_authority(row[col], step.authority);
  });
}

bool host_equal(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::pair<std::string_view, std::string_view> split_host_port(
    std::string_view authority) {
  // A ':' after a bracketed IPv6 host or in a plain host starts the port.
  const std::size_t bracket = authority.rfind(']');
  const std::size_t colon = authority.rfind(':');
  if (colon == std::string_view::npos ||
      (bracket != std::string_view::npos && colon < bracket)) {
    return {authority, {}};
  }
  return {authority.substr(0, colon), authority.substr(colon + 1)};
}

}  // namespace

std::optional<std::size_t> BindingTable::column_index(std::string_view name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns_.begin());
}

const Term& BindingTable::at(std::size_t row, std::string_view column) const {
  const auto col = column_index(column);
  if (!col) throw Error("unknown column '" + std::string(column) + "'");
  return rows_.at(row)[*col];
}

void BindingTable::add_row(Row row) {
  if (row.size() != columns_.size()) {
    throw Error("row has " + std::to_string(row.size()) + " values for " +
                std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

void BindingTable::canonicalize() {
  std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

void validate_plan(const QueryPlan& plan) {
  std::vector<std::string> bound;
  const auto is_bound = [&](const std::string& name) {
    return std::find(bound.begin(), bound.end(), name) != bound.end();
  };
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const PlanStep& step = plan.steps[i];
    if (const auto* f = std::get_if<FilterHostStep>(&step)) {
      if (!is_valid_variable_name(f->variable)) {
        throw PlanError(i, "invalid variable name '" + f->variable + "'");
      }
      if (!is_bound(f->variable)) {
        throw PlanError(i, "filter_host uses unbound variable ?" + f->variable);
      }
      if (f->authority.empty()) throw PlanError(i, "filter_host needs an authority");
      continue;
    }
    const PatternTemplate& tmpl = std::holds_alternative<FetchStep>(step)
                                      ? std::get<FetchStep>(step).pattern
                                      : std::get<ExtendStep>(step).pattern;
    bool references_bound = false;
    for (const Slot* s : slots_of(tmpl)) {
      if (const Variable* v = as_variable(*s)) {
        if (!is_valid_variable_name(v->name)) {
          throw PlanError(i, "invalid variable name '" + v->name + "'");
        }
        references_bound = references_bound || is_bound(v->name);
      }
    }
    if (std::holds_alternative<ExtendStep>(step) && !references_bound) {
      throw PlanError(i, "extend step references no variable bound by an "
                         "earlier step");
    }
    for (auto& v : new_variables(tmpl, bound)) bound.push_back(std::move(v));
  }
  if (plan.output.empty()) throw PlanError(std::nullopt, "plan output is empty");
  for (const auto& name : plan.output) {
    if (!is_bound(name)) {
      throw PlanError(std::nullopt, "output uses unbound variable ?" + name);
    }
    if (std::count(plan.output.begin(), plan.output.end(), name) > 1) {
      throw PlanError(std::nullopt, "output lists ?" + name + " twice");
    }
  }
}

BindingTable run_plan(const QueryPlan& plan, const Client& client,
                      const RunOptions& options) {
  validate_plan(plan);
  Table table;
  table.rows.emplace_back();  // the unit table: one empty row

  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    try {
      std::visit(
          [&](const auto& step) {
            using T = std::decay_t<decltype(step)>;
            if constexpr (std::is_same_v<T, FetchStep>) {
              run_fetch(step, table, client, options);
            } else if constexpr (std::is_same_v<T, ExtendStep>) {
              run_extend(step, table, client, options);
            } else {
              run_filter(step, table);
            }
          },
          plan.steps[i]);
    } catch (const ClientError& e) {
      throw PlanError(i, std::string(step_kind(plan.steps[i])) + ": " + e.what());
    }
  }

  std::vector<std::size_t> picks;
  for (const auto& name : plan.output) picks.push_back(*table.index(name));
  BindingTable result(plan.output);
  for (const auto& row : table.rows) {
    BindingTable::Row projected;
    projected.reserve(picks.size());
    for (auto c : picks) projected.push_back(row[c]);
    result.add_row(std::move(projected));
  }
  result.canonicalize();
  return result;
}

std::vector<Term> project_terms(const BindingTable& table,
                                std::string_view variable) {
  const auto col = table.column_index(variable);
  if (!col) throw Error("unknown variable ?" + std::string(variable));
  std::vector<Term> out;
  out.reserve(table.size());
  for (const auto& row : table.rows()) out.push_back(row[*col]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::string> iri_authority(std::string_view iri) {
  const std::size_t colon = iri.find(':');
  if (colon == std::string_view::npos || iri.substr(colon + 1, 2) != "//") {
    return std::nullopt;
  }
  std::string_view authority = iri.substr(colon + 3);
  authority = authority.substr(0, authority.find_first_of("/?#"));
  if (const std::size_t at = authority.rfind('@'); at != std::string_view::npos) {
    authority.remove_prefix(at + 1);
  }
  return std::string(authority);
}

bool has_authority(const Term& term, std::string_view authority) {
  if (!term.is_iri()) return false;
  const auto actual = iri_authority(term.value());
  if (!actual) return false;
  const auto [host_a, port_a] = split_host_port(*actual);
  const auto [host_b, port_b] = split_host_port(authority);
  return host_equal(host_a, host_b) && port_a == port_b;
}

std::vector<Term> filter_host(std::span<const Term> terms,
                              std::string_view authority) {
  std::vector<Term> out;
  for (const auto& t : terms) {
    if (has_authority(t, authority)) out.push_back(t);
  }
  return out;
}

}  // namespace restpark::federation
