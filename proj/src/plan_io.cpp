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

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "restpark/federation.hpp"
#include "restpark/http_service.hpp"

namespace restpark::federation {

namespace {

using nlohmann::json;

std::string variable_name(std::string_view text) {
  if (!text.empty() && text.front() == '?') text.remove_prefix(1);
  return std::string(text);
}

const std::string& string_field(const json& obj, const char* key,
                                std::optional<std::size_t> step) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw PlanError(step, std::string("\"") + key + "\" must be a string");
  }
  return it->get_ref<const std::string&>();
}

Slot parse_slot(const json& step, const char* key, Position position,
                std::size_t index) {
  const auto it = step.find(key);
  if (it == step.end() || it->is_null()) return std::monostate{};
  if (!it->is_string()) {
    throw PlanError(index, std::string("\"") + key + "\" must be a string");
  }
  const auto& text = it->get_ref<const std::string&>();
  if (!text.empty() && text.front() == '?') return Variable{text.substr(1)};
  try {
    return parse_param_term(position, text);
  } catch (const QueryError& e) {
    throw PlanError(index, e.what());
  }
}

}  // namespace

QueryPlan parse_plan(std::string_view text,
                     const std::map<std::string, std::string>& overrides) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PlanError(std::nullopt, std::string("malformed plan JSON: ") + e.what());
  }
  if (!doc.is_object()) throw PlanError(std::nullopt, "plan must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "endpoints" && key != "steps" && key != "output") {
      throw PlanError(std::nullopt, "unknown plan key \"" + key + "\"");
    }
  }

  std::map<std::string, std::string> endpoints;
  if (const auto it = doc.find("endpoints"); it != doc.end()) {
    if (!it->is_object()) throw PlanError(std::nullopt, "\"endpoints\" must be an object");
    for (const auto& [name, url] : it->items()) {
      if (!url.is_string()) {
        throw PlanError(std::nullopt, "endpoint \"" + name + "\" must be a URL string");
      }
      endpoints[name] = url.get<std::string>();
    }
  }
  for (const auto& [name, url] : overrides) {
    const auto it = endpoints.find(name);
    if (it == endpoints.end()) {
      throw PlanError(std::nullopt, "override for unknown endpoint \"" + name + "\"");
    }
    it->second = url;
  }

  const auto resolve = [&](const std::string& ref, std::size_t index) {
    const auto it = endpoints.find(ref);
    const std::string& url = it != endpoints.end() ? it->second : ref;
    if (it == endpoints.end() && url.find("://") == std::string::npos) {
      throw PlanError(index, "unknown endpoint \"" + ref + "\"");
    }
    try {
      return Endpoint::parse(url);
    } catch (const Error& e) {
      throw PlanError(index, e.what());
    }
  };

  QueryPlan plan;
  const auto steps = doc.find("steps");
  if (steps == doc.end() || !steps->is_array()) {
    throw PlanError(std::nullopt, "\"steps\" must be an array");
  }
  for (std::size_t i = 0; i < steps->size(); ++i) {
    const json& step = (*steps)[i];
    if (!step.is_object()) throw PlanError(i, "step must be an object");
    const std::string& kind = string_field(step, "kind", i);
    if (kind == "filter_host") {
      for (const auto& [key, _] : step.items()) {
        if (key != "kind" && key != "variable" && key != "authority") {
          throw PlanError(i, "unknown key \"" + key + "\"");
        }
      }
      plan.steps.emplace_back(FilterHostStep{
          variable_name(string_field(step, "variable", i)),
          string_field(step, "authority", i)});
      continue;
    }
    if (kind != "fetch" && kind != "extend") {
      throw PlanError(i, "unknown step kind \"" + kind + "\"");
    }
    for (const auto& [key, _] : step.items()) {
      if (key != "kind" && key != "endpoint" && key != "subject" &&
          key != "predicate" && key != "object") {
        throw PlanError(i, "unknown key \"" + key + "\"");
      }
    }
    Endpoint endpoint = resolve(string_field(step, "endpoint", i), i);
    PatternTemplate pattern{parse_slot(step, "subject", Position::subject, i),
                            parse_slot(step, "predicate", Position::predicate, i),
                            parse_slot(step, "object", Position::object, i)};
    if (kind == "fetch") {
      plan.steps.emplace_back(FetchStep{std::move(endpoint), std::move(pattern)});
    } else {
      plan.steps.emplace_back(ExtendStep{std::move(endpoint), std::move(pattern)});
    }
  }

  const auto output = doc.find("output");
  if (output == doc.end() || !output->is_array()) {
    throw PlanError(std::nullopt, "\"output\" must be an array");
  }
  for (const auto& name : *output) {
    if (!name.is_string()) throw PlanError(std::nullopt, "output entries must be strings");
    plan.output.push_back(variable_name(name.get<std::string>()));
  }
  validate_plan(plan);
  return plan;
}

QueryPlan load_plan(const std::filesystem::path& path,
                    const std::map<std::string, std::string>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PlanError(std::nullopt, "cannot read plan file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_plan(buffer.str(), overrides);
}

}  // namespace restpark::federation
