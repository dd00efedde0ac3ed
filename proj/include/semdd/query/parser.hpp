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

// Parser for the SELECT-only SPARQL subset documented in
// docs/query-grammar.md.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "semdd/query/algebra.hpp"
#include "semdd/rdf/graph_store.hpp"

namespace semdd::query {

class QueryError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownPrefix, Semantic };

  QueryError(Kind kind, std::size_t line, std::size_t column, std::string message,
             std::string token = {});

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& token() const { return token_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string token_;
};

// Parses `text`. Prefixes declared in the query take precedence over
// `predeclared`, which lets queries written against the store's prefix table
// omit PREFIX lines. Throws QueryError.
Query parse_query(std::string_view text,
                  const rdf::PrefixMap& predeclared = rdf::PrefixMap::standard());

}  // namespace semdd::query
