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

#include "restpark/jsonld.hpp"

#include <algorithm>
#include <json.hpp>

namespace restpark::jsonld {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string node_id(const Term& t) {
  return t.is_blank() ? "_:" + t.value() : t.value();
}

Term parse_node_id(const std::string& id) {
  if (id.empty()) throw DecodeError("empty @id");
  try {
    if (id.rfind("_:", 0) == 0) return Term::blank(id.substr(2));
    return Term::iri(id);
  } catch (const TermError& e) {
    throw DecodeError(std::string("invalid @id: ") + e.what());
  }
}

ordered_json value_object(const Term& t) {
  ordered_json v = ordered_json::object();
  if (!t.is_literal()) {
    v["@id"] = node_id(t);
    return v;
  }
  v["@value"] = t.value();
  if (!t.language().empty()) {
    v["@language"] = t.language();
  } else if (t.datatype() != kXsdString) {
    v["@type"] = t.datatype();
  }
  return v;
}

const std::string& require_string(const nlohmann::json& j,
                                  std::string_view what) {
  if (!j.is_string()) {
    throw DecodeError(std::string(what) + " must be a string");
  }
  return j.get_ref<const std::string&>();
}

Term decode_value(const nlohmann::json& v) {
  if (!v.is_object()) throw DecodeError("value must be an object");
  if (v.contains("@id")) {
    if (v.size() != 1) throw DecodeError("node reference has extra keys");
    return parse_node_id(require_string(v["@id"], "@id"));
  }
  if (!v.contains("@value")) {
    throw DecodeError("value object needs @id or @value");
  }
  std::optional<std::string> language;
  std::optional<std::string> type;
  for (const auto& [key, item] : v.items()) {
    if (key == "@value") continue;
    if (key == "@language") {
      language = require_string(item, "@language");
    } else if (key == "@type") {
      type = require_string(item, "@type");
    } else {
      throw DecodeError("unknown key in value object: " + key);
    }
  }
  if (language && type) {
    throw DecodeError("value object has both @language and @type");
  }
  try {
    return Term::literal(require_string(v["@value"], "@value"),
                         std::move(language), std::move(type));
  } catch (const TermError& e) {
    throw DecodeError(std::string("invalid literal: ") + e.what());
  }
}

}  // namespace

std::string encode_graph(std::span<const Triple> input) {
  std::vector<Triple> triples(input.begin(), input.end());
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

  ordered_json graph = ordered_json::array();
  // SPO order groups subjects, then predicates (IRI text, code point order),
  // then objects.
  for (std::size_t i = 0; i < triples.size();) {
    const Term& subject = triples[i].subject();
    ordered_json node = ordered_json::object();
    node["@id"] = node_id(subject);
    while (i < triples.size() && triples[i].subject() == subject) {
      const Term& predicate = triples[i].predicate();
      ordered_json values = ordered_json::array();
      while (i < triples.size() && triples[i].subject() == subject &&
             triples[i].predicate() == predicate) {
        values.push_back(value_object(triples[i].object()));
        ++i;
      }
      node[predicate.value()] = std::move(values);
    }
    graph.push_back(std::move(node));
  }
  ordered_json doc = ordered_json::object();
  doc["@graph"] = std::move(graph);
  return doc.dump();
}

std::vector<Triple> decode_graph(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw DecodeError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DecodeError("document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "@graph") throw DecodeError("unknown top-level key: " + key);
  }
  if (!doc.contains("@graph") || !doc["@graph"].is_array()) {
    throw DecodeError("document needs an @graph array");
  }

  std::vector<Triple> triples;
  for (const auto& node : doc["@graph"]) {
    if (!node.is_object()) throw DecodeError("graph entries must be objects");
    if (!node.contains("@id")) throw DecodeError("node object missing @id");
    const Term subject = parse_node_id(require_string(node["@id"], "@id"));
    if (subject.is_literal()) throw DecodeError("literal subject");
    for (const auto& [key, values] : node.items()) {
      if (key == "@id") continue;
      if (key.empty() || key.front() == '@') {
        throw DecodeError("unknown keyword: " + key);
      }
      Term predicate = [&] {
        try {
          return Term::iri(key);
        } catch (const TermError& e) {
          throw DecodeError(std::string("invalid predicate: ") + e.what());
        }
      }();
      if (!values.is_array()) {
        throw DecodeError("values of " + key + " must be an array");
      }
      for (const auto& v : values) {
        triples.emplace_back(subject, predicate, decode_value(v));
      }
    }
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  return triples;
}

}  // namespace restpark::jsonld
