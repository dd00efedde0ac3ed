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

#include "semdd/query/results.hpp"

#include <algorithm>
#include <stdexcept>

namespace semdd::query {

using rdf::Term;

std::optional<std::size_t> ResultTable::column(std::string_view name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables.begin());
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const ResultTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.variables.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.variables[i]);
  }
  out += "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (!row[i]) continue;
      const Term& t = *row[i];
      out += csv_field(t.is_blank() ? "_:" + t.value : t.value);
    }
    out += "\r\n";
  }
  return out;
}

nlohmann::json term_to_json(const Term& t) {
  nlohmann::json j;
  switch (t.kind) {
    case rdf::TermKind::Iri: j["type"] = "iri"; break;
    case rdf::TermKind::BlankNode: j["type"] = "bnode"; break;
    case rdf::TermKind::Literal: j["type"] = "literal"; break;
  }
  j["value"] = t.value;
  if (t.is_literal()) {
    if (!t.language.empty()) {
      j["lang"] = t.language;
    } else {
      j["datatype"] = t.datatype;
    }
  }
  return j;
}

Term term_from_json(const nlohmann::json& j) {
  std::string type = j.at("type").get<std::string>();
  std::string value = j.at("value").get<std::string>();
  if (type == "iri") return Term::iri(std::move(value));
  if (type == "bnode") return Term::blank(std::move(value));
  if (type != "literal") throw std::invalid_argument("unknown term type: " + type);
  if (j.contains("lang")) return Term::lang_literal(std::move(value), j["lang"].get<std::string>());
  return Term::literal(std::move(value), j.value("datatype", std::string(vocab::kXsdString)));
}

nlohmann::json to_json(const ResultTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i]) obj[table.variables[i]] = term_to_json(*row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return {{"variables", table.variables}, {"rows", std::move(rows)}};
}

ResultTable table_from_json(const nlohmann::json& j) {
  ResultTable t;
  t.variables = j.at("variables").get<std::vector<std::string>>();
  for (const auto& obj : j.at("rows")) {
    std::vector<std::optional<Term>> row(t.variables.size());
    for (std::size_t i = 0; i < t.variables.size(); ++i) {
      if (obj.contains(t.variables[i])) row[i] = term_from_json(obj[t.variables[i]]);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace semdd::query
