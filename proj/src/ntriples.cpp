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

#include "restpark/ntriples.hpp"

#include "restpark/utf8.hpp"
#include "term_reader.hpp"

namespace restpark::ntriples {

bool parse_line(std::string_view line, std::vector<Triple>& out) {
  if (!utf8::is_valid(line)) throw TermError("line is not valid UTF-8");
  detail::TermReader reader(line);
  reader.skip_blanks();
  if (reader.at_end() || reader.peek() == '#') return false;

  Term subject = reader.read({TermKind::iri, TermKind::blank});
  reader.skip_blanks();
  Term predicate = reader.read({TermKind::iri});
  reader.skip_blanks();
  Term object = reader.read(KindSet::all());
  reader.skip_blanks();
  if (reader.peek() != '.') {
    throw TermError("expected '.' at offset " + std::to_string(reader.pos()));
  }
  reader.advance();
  reader.skip_blanks();
  if (!reader.at_end() && reader.peek() != '#') {
    throw TermError("unexpected text after '.' at offset " +
                    std::to_string(reader.pos()));
  }
  out.emplace_back(std::move(subject), std::move(predicate), std::move(object));
  return true;
}

ParseReport parse_document(std::string_view text, bool strict) {
  ParseReport report;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;
    try {
      parse_line(line, report.triples);
    } catch (const TermError& e) {
      if (strict) throw SyntaxError(line_no, e.what());
      report.errors.push_back({line_no, e.what()});
    }
  }
  return report;
}

std::string format_triple(const Triple& t) {
  std::string out = format_term(t.subject());
  out += ' ';
  out += format_term(t.predicate());
  out += ' ';
  out += format_term(t.object());
  out += " .";
  return out;
}

std::string serialize_document(std::span<const Triple> triples) {
  std::string out;
  for (const auto& t : triples) {
    out += format_triple(t);
    out += '\n';
  }
  return out;
}

}  // namespace restpark::ntriples
