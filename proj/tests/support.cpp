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

#include "support.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace restpark::testing {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Term TermGen::iri() {
  static const char* const kBases[] = {
      "http://example.org/", "http://dbpedia.org/resource/",
      "urn:x:", "http://ex.org/π/", "https://a.b/c?d=e#"};
  std::string s = kBases[uniform(0, 4)];
  s += "r" + std::to_string(uniform(0, pool_));
  return Term::iri(std::move(s));
}

Term TermGen::blank() {
  static const char* const kPrefixes[] = {"b", "node.", "x-", "N_"};
  return Term::blank(kPrefixes[uniform(0, 3)] + std::to_string(uniform(0, pool_)));
}

std::string TermGen::nasty_text() {
  static const char* const kPieces[] = {
      "a", "Z", " ", "\"", "\\", "\n", "\r", "\t", "é", "中文", "😀",
      "\x01", "\x7f", "#", "<>", "&=?%", "+", "@en", "^^", "."};
  std::string s;
  const int n = uniform(0, 6);
  for (int i = 0; i < n; ++i) s += kPieces[uniform(0, 19)];
  return s;
}

Term TermGen::literal() {
  std::string lexical = coin(0.3) ? nasty_text() : "v" + std::to_string(uniform(0, pool_));
  switch (uniform(0, 3)) {
    case 0: {
      static const char* const kLangs[] = {"en", "EN-gb", "fr", "de-CH-1996"};
      return Term::literal(std::move(lexical), std::string(kLangs[uniform(0, 3)]));
    }
    case 1: {
      static const char* const kTypes[] = {
          "http://www.w3.org/2001/XMLSchema#integer",
          "http://www.w3.org/2001/XMLSchema#date",
          "http://www.w3.org/2001/XMLSchema#string"};
      return Term::literal(std::move(lexical), std::nullopt,
                           std::string(kTypes[uniform(0, 2)]));
    }
    default:
      return Term::literal(std::move(lexical));
  }
}

Term TermGen::subject() { return coin(0.8) ? iri() : blank(); }

Term TermGen::predicate() {
  return Term::iri("http://p.example/" + std::to_string(uniform(0, pool_ / 3 + 1)));
}

Term TermGen::object() {
  switch (uniform(0, 2)) {
    case 0: return iri();
    case 1: return blank();
    default: return literal();
  }
}

Term TermGen::any_term() {
  switch (uniform(0, 3)) {
    case 0: return iri();
    case 1: return blank();
    case 2: return predicate();
    default: return literal();
  }
}

Triple TermGen::triple() { return Triple(subject(), predicate(), object()); }

std::vector<Triple> TermGen::triples(std::size_t n) {
  std::vector<Triple> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(triple());
  return out;
}

TriplePattern TermGen::pattern(const Triple* source) {
  const int shape = uniform(0, 7);
  TriplePattern p;
  if (shape & 1) p.subject = source ? source->subject() : subject();
  if (shape & 2) p.predicate = source ? source->predicate() : predicate();
  if (shape & 4) p.object = source ? source->object() : object();
  return p;
}

namespace {

// Brute-force evaluation straight over the fixture files: every data step is
// a nested loop over all triples of its dataset.
using Binding = std::map<std::string, Term>;

bool unify(const federation::Slot& slot, const Term& value, Binding& b) {
  if (std::holds_alternative<std::monostate>(slot)) return true;
  if (const auto* t = std::get_if<Term>(&slot)) return *t == value;
  const auto& name = std::get<federation::Variable>(slot).name;
  const auto it = b.find(name);
  if (it != b.end()) return it->second == value;
  b.emplace(name, value);
  return true;
}

}  // namespace

std::set<std::vector<Term>> brute_force_plan(const federation::QueryPlan& plan,
    const std::map<std::string, std::vector<Triple>>& data_by_url) {
  std::vector<Binding> rows{Binding{}};
  for (const auto& step : plan.steps) {
    std::vector<Binding> next;
    if (const auto* f = std::get_if<federation::FilterHostStep>(&step)) {
      for (const auto& b : rows) {
        const Term& t = b.at(f->variable);
        if (t.is_iri() && federation::iri_authority(t.value()) == f->authority) next.push_back(b);
      }
    } else {
      const auto& [endpoint, pattern] = std::visit(
          [](const auto& s) -> std::pair<Endpoint, federation::PatternTemplate> {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, federation::FilterHostStep>) {
              return {};
            } else {
              return {s.endpoint, s.pattern};
            }
          },
          step);
      for (const auto& b : rows) {
        for (const auto& t : data_by_url.at(endpoint.base_url())) {
          Binding nb = b;
          if (unify(pattern.subject, t.subject(), nb) && unify(pattern.predicate, t.predicate(), nb) &&
              unify(pattern.object, t.object(), nb)) {
            next.push_back(std::move(nb));
          }
        }
      }
    }
    rows = std::move(next);
  }
  std::set<std::vector<Term>> out;
  for (const auto& b : rows) {
    std::vector<Term> row;
    for (const auto& name : plan.output) row.push_back(b.at(name));
    out.insert(row);
  }
  return out;
}

int closed_port() {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw std::runtime_error("socket failed");
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  socklen_t len = sizeof(addr);
  const bool ok = ::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) == 0 &&
                  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len) == 0;
  ::close(fd);
  if (!ok) throw std::runtime_error("bind failed");
  return ntohs(addr.sin_port);
}

}  // namespace restpark::testing
