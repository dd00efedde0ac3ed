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

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semdd/rdf/term.hpp"

namespace semdd::query {

// Unbound cells are empty optionals.
struct ResultTable {
  std::vector<std::string> variables;
  std::vector<std::vector<std::optional<rdf::Term>>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
};

// RFC 4180. Header is the variable names; IRIs and literals are written as
// their string value, blank nodes as _:label, unbound cells as empty fields.
std::string to_csv(const ResultTable& table);
std::string csv_field(std::string_view value);

// {"variables": [...], "rows": [{"v": {"type", "value", "datatype"?, "lang"?}}]}
// Unbound variables are omitted from a row object.
nlohmann::json to_json(const ResultTable& table);
ResultTable table_from_json(const nlohmann::json& j);

nlohmann::json term_to_json(const rdf::Term& t);
rdf::Term term_from_json(const nlohmann::json& j);

}  // namespace semdd::query
