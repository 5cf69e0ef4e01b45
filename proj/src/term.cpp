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

#include "restpark/term.hpp"

#include <algorithm>
#include <ostream>

#include "restpark/utf8.hpp"
#include "term_reader.hpp"

namespace restpark {

namespace {

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return is_alpha(c) || is_digit(c); }

bool is_forbidden_iri_char(char ch) {
  const auto c = static_cast<unsigned char>(ch);
  if (c <= 0x20 || c == 0x7F) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '^': case '`': case '\\':
      return true;
    default:
      return false;
  }
}

bool is_valid_language(std::string_view tag) {
  std::size_t i = 0;
  const auto subtag = [&](bool first) {
    const std::size_t start = i;
    while (i < tag.size() && (first ? is_alpha(tag[i]) : is_alnum(tag[i]))) ++i;
    return i > start;
  };
  if (!subtag(true)) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    ++i;
    if (!subtag(false)) return false;
  }
  return true;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  });
  return s;
}

void append_escaped(std::string& out, std::string_view lexical) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  for (char ch : lexical) {
    const auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20 || c == 0x7F) {
          out += "\\u00";
          out.push_back(kHex[c >> 4]);
          out.push_back(kHex[c & 0xF]);
        } else {
          out.push_back(ch);
        }
    }
  }
}

}  // namespace

std::string_view to_string(TermKind kind) {
  switch (kind) {
    case TermKind::iri: return "iri";
    case TermKind::blank: return "blank";
    case TermKind::literal: return "literal";
  }
  return "?";
}

bool is_valid_iri(std::string_view iri) {
  // Absolute IRIs only: scheme ":" rest.
  const auto colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0 || !is_alpha(iri[0])) {
    return false;
  }
  for (std::size_t i = 1; i < colon; ++i) {
    const char c = iri[i];
    if (!is_alnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  if (std::any_of(iri.begin(), iri.end(), is_forbidden_iri_char)) return false;
  return utf8::is_valid(iri);
}

bool is_valid_blank_label(std::string_view label) {
  if (label.empty() || !is_alnum(label.front()) || label.back() == '.') {
    return false;
  }
  return std::all_of(label.begin(), label.end(), [](char c) {
    return is_alnum(c) || c == '.' || c == '_' || c == '-';
  });
}

Term Term::iri(std::string value) {
  if (!is_valid_iri(value)) {
    throw TermError("invalid IRI <" + value + ">");
  }
  return Term(TermKind::iri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
  if (!is_valid_blank_label(label)) {
    throw TermError("invalid blank node label '" + label + "'");
  }
  return Term(TermKind::blank, std::move(label), {}, {});
}

Term Term::literal(std::string lexical, std::optional<std::string> language,
                   std::optional<std::string> datatype) {
  if (!utf8::is_valid(lexical)) {
    throw TermError("literal is not valid UTF-8");
  }
  if (language && datatype) {
    throw TermError("literal cannot have both a language tag and a datatype");
  }
  if (language) {
    if (!is_valid_language(*language)) {
      throw TermError("invalid language tag '" + *language + "'");
    }
    return Term(TermKind::literal, std::move(lexical),
                lowercase(std::move(*language)), {});
  }
  if (datatype) {
    if (!is_valid_iri(*datatype)) {
      throw TermError("invalid datatype IRI <" + *datatype + ">");
    }
    return Term(TermKind::literal, std::move(lexical), {},
                std::move(*datatype));
  }
  return Term(TermKind::literal, std::move(lexical), {},
              std::string(kXsdString));
}

std::strong_ordering compare_terms(const Term& a, const Term& b) {
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  // std::string compares through char_traits<char>, i.e. as unsigned bytes,
  // which for UTF-8 is code point order.
  if (auto c = a.value().compare(b.value()); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.language().compare(b.language()); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.datatype().compare(b.datatype()); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  return compare_terms(a, b);
}

Term parse_term(std::string_view text, KindSet allowed) {
  if (!utf8::is_valid(text)) throw TermError("term is not valid UTF-8");
  detail::TermReader reader(text);
  Term term = reader.read(allowed);
  if (!reader.at_end()) {
    throw TermError("unexpected trailing text after term at offset " +
                    std::to_string(reader.pos()));
  }
  return term;
}

std::string format_term(const Term& term) {
  std::string out;
  switch (term.kind()) {
    case TermKind::iri:
      out.reserve(term.value().size() + 2);
      out += '<';
      out += term.value();
      out += '>';
      break;
    case TermKind::blank:
      out = "_:" + term.value();
      break;
    case TermKind::literal:
      out.reserve(term.value().size() + 2);
      out += '"';
      append_escaped(out, term.value());
      out += '"';
      if (!term.language().empty()) {
        out += '@';
        out += term.language();
      } else if (term.datatype() != kXsdString) {
        out += "^^<";
        out += term.datatype();
        out += '>';
      }
      break;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& term) {
  return os << format_term(term);
}

Triple::Triple(Term subject, Term predicate, Term object)
    : subject_(std::move(subject)),
      predicate_(std::move(predicate)),
      object_(std::move(object)) {
  if (subject_.is_literal()) {
    throw TermError("triple subject must be an IRI or blank node, got " +
                    format_term(subject_));
  }
  if (!predicate_.is_iri()) {
    throw TermError("triple predicate must be an IRI, got " +
                    format_term(predicate_));
  }
}

std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << t.subject() << ' ' << t.predicate() << ' ' << t.object()
            << " .";
}

bool TriplePattern::is_satisfiable() const {
  if (subject && subject->is_literal()) return false;
  if (predicate && !predicate->is_iri()) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const TriplePattern& p) {
  const auto slot = [&](const std::optional<Term>& t) -> std::ostream& {
    return t ? (os << *t) : (os << '*');
  };
  os << '(';
  slot(p.subject) << ' ';
  slot(p.predicate) << ' ';
  slot(p.object) << ')';
  return os;
}

bool pattern_matches(const TriplePattern& pattern, const Triple& triple) {
  return (!pattern.subject || *pattern.subject == triple.subject()) &&
         (!pattern.predicate || *pattern.predicate == triple.predicate()) &&
         (!pattern.object || *pattern.object == triple.object());
}

namespace detail {

void TermReader::fail(std::string_view what) const {
  throw TermError(std::string(what) + " at offset " + std::to_string(pos_));
}

bool TermReader::skip_blanks() {
  const std::size_t start = pos_;
  while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  return pos_ > start;
}

char32_t TermReader::read_hex(int digits) {
  char32_t value = 0;
  for (int i = 0; i < digits; ++i) {
    if (at_end()) fail("truncated unicode escape");
    const char c = text_[pos_++];
    value <<= 4;
    if (c >= '0' && c <= '9') {
      value |= static_cast<char32_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      value |= static_cast<char32_t>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      value |= static_cast<char32_t>(c - 'A' + 10);
    } else {
      fail("invalid hex digit in unicode escape");
    }
  }
  return value;
}

std::string TermReader::read_iriref() {
  ++pos_;  // '<'
  std::string out;
  while (true) {
    if (at_end()) fail("unterminated IRI");
    const char c = text_[pos_];
    if (c == '>') {
      ++pos_;
      return out;
    }
    if (c == '\\') {
      ++pos_;
      const char kind = peek();
      if (kind != 'u' && kind != 'U') fail("invalid escape in IRI");
      ++pos_;
      const char32_t cp = read_hex(kind == 'u' ? 4 : 8);
      if (!utf8::append(out, cp)) fail("invalid code point in IRI escape");
      continue;
    }
    if (is_forbidden_iri_char(c)) fail("forbidden character in IRI");
    out.push_back(c);
    ++pos_;
  }
}

std::string TermReader::read_blank_label() {
  pos_ += 1;  // '_'
  if (peek() != ':') fail("expected ':' after '_'");
  ++pos_;
  const std::size_t start = pos_;
  while (!at_end()) {
    const char c = text_[pos_];
    if (!is_alnum(c) && c != '.' && c != '_' && c != '-') break;
    ++pos_;
  }
  // A trailing '.' terminates the statement rather than belonging to the
  // label.
  while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
  return std::string(text_.substr(start, pos_ - start));
}

std::string TermReader::read_quoted() {
  ++pos_;  // '"'
  std::string out;
  while (true) {
    if (at_end()) fail("unterminated literal");
    const char c = text_[pos_];
    if (c == '"') {
      ++pos_;
      return out;
    }
    if (c == '\n' || c == '\r') fail("raw line break inside literal");
    if (c != '\\') {
      out.push_back(c);
      ++pos_;
      continue;
    }
    ++pos_;
    if (at_end()) fail("unterminated escape");
    const char e = text_[pos_++];
    switch (e) {
      case 't': out.push_back('\t'); break;
      case 'b': out.push_back('\b'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 'f': out.push_back('\f'); break;
      case '"': out.push_back('"'); break;
      case '\'': out.push_back('\''); break;
      case '\\': out.push_back('\\'); break;
      case 'u':
      case 'U': {
        const char32_t cp = read_hex(e == 'u' ? 4 : 8);
        if (!utf8::append(out, cp)) fail("invalid code point in escape");
        break;
      }
      default:
        --pos_;
        fail("invalid escape sequence");
    }
  }
}

std::string TermReader::read_language() {
  ++pos_;  // '@'
  const std::size_t start = pos_;
  while (!at_end() && (is_alnum(text_[pos_]) || text_[pos_] == '-')) ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

Term TermReader::read(KindSet allowed) {
  const char c = peek();
  TermKind kind;
  if (c == '<') {
    kind = TermKind::iri;
  } else if (c == '_') {
    kind = TermKind::blank;
  } else if (c == '"') {
    kind = TermKind::literal;
  } else {
    fail(at_end() ? "expected a term, found end of input"
                  : "expected a term ('<', '_:' or '\"')");
  }
  if (!allowed.contains(kind)) {
    fail(std::string(to_string(kind)) + " not allowed in this position");
  }
  switch (kind) {
    case TermKind::iri:
      return Term::iri(read_iriref());
    case TermKind::blank:
      return Term::blank(read_blank_label());
    case TermKind::literal: {
      std::string lexical = read_quoted();
      if (peek() == '@') {
        return Term::literal(std::move(lexical), read_language());
      }
      if (peek() == '^') {
        ++pos_;
        if (peek() != '^') fail("expected '^^' before datatype");
        ++pos_;
        if (peek() != '<') fail("expected datatype IRI after '^^'");
        return Term::literal(std::move(lexical), std::nullopt, read_iriref());
      }
      return Term::literal(std::move(lexical));
    }
  }
  fail("unreachable");
}

}  // namespace detail
}  // namespace restpark

namespace {
inline void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}
}  // namespace

std::size_t std::hash<restpark::Term>::operator()(
    const restpark::Term& t) const noexcept {
  std::size_t seed = static_cast<std::size_t>(t.kind());
  const std::hash<std::string> h;
  hash_combine(seed, h(t.value()));
  hash_combine(seed, h(t.language()));
  hash_combine(seed, h(t.datatype()));
  return seed;
}

std::size_t std::hash<restpark::Triple>::operator()(
    const restpark::Triple& t) const noexcept {
  const std::hash<restpark::Term> h;
  std::size_t seed = h(t.subject());
  hash_combine(seed, h(t.predicate()));
  hash_combine(seed, h(t.object()));
  return seed;
}
