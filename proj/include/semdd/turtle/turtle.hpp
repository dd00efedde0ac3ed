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

// Turtle subset reader/writer. Supported: @prefix / PREFIX, <IRI>, prefixed
// names, `a`, predicate lists (;), object lists (,), labeled blank nodes,
// short and long strings with escapes, language tags, ^^ datatypes, bare
// integer/decimal/double/boolean literals and # comments. Anonymous blank
// nodes `[ ]` and collections `( )` are rejected. See docs/turtle-subset.md.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semdd/rdf/graph_store.hpp"
#include "semdd/rdf/term.hpp"

namespace semdd::turtle {

struct TurtleDocument {
  std::vector<std::pair<std::string, std::string>> prefixes;
  std::vector<rdf::Triple> triples;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message, std::string token);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string token_;
};

// Parses UTF-8 Turtle. Throws ParseError.
TurtleDocument parse_turtle(std::string_view text);

// Deterministic serialization: triples sorted by (subject, predicate, object),
// grouped per subject. Every prefix in `prefixes` is declared.
std::string serialize_turtle(std::span<const rdf::Triple> triples, const rdf::PrefixMap& prefixes);

// Helpers shared with the SPARQL lexer and the ETL.
std::string encode_utf8(char32_t cp);
bool is_valid_prefix_name(std::string_view prefix);
bool is_simple_local_name(std::string_view local);

}  // namespace semdd::turtle
