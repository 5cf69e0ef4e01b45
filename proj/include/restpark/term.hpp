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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "restpark/error.hpp"

namespace restpark {

inline constexpr std::string_view kXsdString =
    "http://www.w3.org/2001/XMLSchema#string";

enum class TermKind : std::uint8_t { iri = 0, blank = 1, literal = 2 };

std::string_view to_string(TermKind kind);

/// Small bit set of term kinds, used to restrict what a parser accepts.
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<TermKind> kinds) {
    for (auto k : kinds) bits_ |= bit(k);
  }
  static constexpr KindSet all() {
    return {TermKind::iri, TermKind::blank, TermKind::literal};
  }
  constexpr bool contains(TermKind k) const { return (bits_ & bit(k)) != 0; }

 private:
  static constexpr std::uint8_t bit(TermKind k) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
  }
  std::uint8_t bits_ = 0;
};

/// An RDF node: IRI, blank node or literal.
///
/// Terms are validated on construction and immutable afterwards. A literal
/// always carries exactly one of a language tag or a datatype: plain literals
/// are given the datatype xsd:string, and language tags are stored lowercase.
/// IRIs must be absolute (`scheme:...`) and free of the characters N-Triples
/// forbids inside `<...>`.
class Term {
 public:
  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical,
                      std::optional<std::string> language = std::nullopt,
                      std::optional<std::string> datatype = std::nullopt);

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::iri; }
  bool is_blank() const { return kind_ == TermKind::blank; }
  bool is_literal() const { return kind_ == TermKind::literal; }

  /// IRI text, blank label (without `_:`), or literal lexical form.
  const std::string& value() const { return value_; }
  /// Empty unless this is a language-tagged literal.
  const std::string& language() const { return language_; }
  /// Empty unless this is a literal without a language tag.
  const std::string& datatype() const { return datatype_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(TermKind kind, std::string value, std::string language,
       std::string datatype)
      : kind_(kind),
        value_(std::move(value)),
        language_(std::move(language)),
        datatype_(std::move(datatype)) {}

  TermKind kind_;
  std::string value_;
  std::string language_;
  std::string datatype_;
};

// Total order: kind (iri < blank < literal), value, language, datatype.
// Strings compare by code point.
std::strong_ordering compare_terms(const Term& a, const Term& b);

/// Parses a single N-Triples term. The whole of `text` must be consumed.
Term parse_term(std::string_view text, KindSet allowed = KindSet::all());

/// Canonical N-Triples rendering; xsd:string literals omit the datatype.
std::string format_term(const Term& term);

std::ostream& operator<<(std::ostream& os, const Term& term);

bool is_valid_iri(std::string_view iri);
bool is_valid_blank_label(std::string_view label);

/// An RDF statement. Subjects are IRIs or blank nodes, predicates are IRIs.
class Triple {
 public:
  Triple(Term subject, Term predicate, Term object);

  const Term& subject() const { return subject_; }
  const Term& predicate() const { return predicate_; }
  const Term& object() const { return object_; }

  // Member-wise, which is SPO order under compare_terms.
  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&,
                                          const Triple&) = default;

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

std::ostream& operator<<(std::ostream& os, const Triple& triple);

/// A triple with optional positions; an empty position is a wildcard.
///
/// Any term may be placed in any position. A literal subject, or a
/// non-IRI predicate, yields a pattern that matches nothing.
struct TriplePattern {
  std::optional<Term> subject;
  std::optional<Term> predicate;
  std::optional<Term> object;

  bool is_satisfiable() const;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

std::ostream& operator<<(std::ostream& os, const TriplePattern& pattern);

bool pattern_matches(const TriplePattern& pattern, const Triple& triple);

}  // namespace restpark

template <>
struct std::hash<restpark::Term> {
  std::size_t operator()(const restpark::Term& t) const noexcept;
};

template <>
struct std::hash<restpark::Triple> {
  std::size_t operator()(const restpark::Triple& t) const noexcept;
};
