// Copyright 2026 The semdd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "semdd/rdf/vocab.hpp"

namespace semdd::rdf {

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

// An RDF term. `value` holds the IRI, the blank node label or the literal's
// lexical form depending on `kind`. `datatype` and `language` are only
// meaningful for literals.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;
  std::string datatype;
  std::string language;

  static Term iri(std::string iri);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = vocab::kXsdString);
  static Term lang_literal(std::string lexical, std::string language);
  static Term integer(std::int64_t v);
  static Term decimal(double v);
  static Term double_value(double v);
  static Term boolean(bool v);

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_blank() const { return kind == TermKind::BlankNode; }
  bool is_literal() const { return kind == TermKind::Literal; }

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept;
};

class InvalidTerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Returns the reason `t` violates the term invariants, or nullopt if it is
// well formed.
std::optional<std::string> validation_error(const Term& t);
std::optional<std::string> validation_error(const Triple& t);

// N-Triples style rendering, used for diagnostics and canonical row keys.
std::string to_string(const Term& t);
std::string to_string(const Triple& t);

// ---------------------------------------------------------------------------
// Numeric value space

enum class NumericType : std::uint8_t { Integer = 0, Decimal = 1, Double = 2 };

struct Numeric {
  NumericType type = NumericType::Integer;
  long double value = 0;
};

bool is_numeric_datatype(std::string_view datatype);

// Value of an xsd:integer / xsd:decimal / xsd:double literal; nullopt for
// anything else, including numeric literals with malformed lexical forms.
std::optional<Numeric> numeric_value(const Term& t);

// Literal for `value` with the canonical lexical form of `type`.
Term make_numeric(NumericType type, long double value);

// RDF term equality, except that numeric literals compare by value
// (xsd:integer 12 equals xsd:decimal 12.0).
bool value_equal(const Term& a, const Term& b);

// Lexical-form checks used by validation and by the ETL coercion.
bool is_integer_lexical(std::string_view s);
bool is_decimal_lexical(std::string_view s);
bool is_double_lexical(std::string_view s);

}  // namespace semdd::rdf
