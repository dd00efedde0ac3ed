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

#include <stdexcept>
#include <string>
#include <vector>

#include "semdd/prov/csv.hpp"
#include "semdd/prov/schema.hpp"
#include "semdd/rdf/term.hpp"

namespace semdd::prov {

// A cell that cannot be coerced to its attribute's datatype. `row` counts
// data rows from 1 (the header is not counted).
class TransformError : public std::runtime_error {
 public:
  TransformError(std::size_t row, std::string column, std::string value, const std::string& datatype);
  std::size_t row() const { return row_; }
  const std::string& column() const { return column_; }
  const std::string& value() const { return value_; }

 private:
  std::size_t row_;
  std::string column_;
  std::string value_;
};

// Columns the schema needs that the table lacks.
class ColumnMismatch : public std::runtime_error {
 public:
  explicit ColumnMismatch(std::vector<std::string> missing);
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

// Per row: every node whose placeholder and required cells are non-blank
// gets its PROV class, extra types and one triple per non-blank attribute;
// edges are emitted when both endpoints exist. The result is sorted and free
// of duplicates, so it depends only on (table, schema).
std::vector<rdf::Triple> transform(const SourceTable& table, const ObjectModelSchema& schema);

// Percent-encodes everything outside RFC 3986 "unreserved".
std::string percent_encode(std::string_view s);

}  // namespace semdd::prov
