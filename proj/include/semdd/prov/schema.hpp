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

// Object-model schemas: which PROV nodes and edges one row of a table turns
// into. The JSON document format is described by docs/object-model-schema.json.

#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "semdd/rdf/graph_store.hpp"
#include "semdd/rdf/term.hpp"

namespace semdd::prov {

enum class NodeKind { Entity, Activity, Agent };
enum class Relation { WasGeneratedBy, WasAssociatedWith, Used, WasAttributedTo, ActedOnBehalfOf };

struct AttributeTemplate {
  std::string predicate;              // qualified name
  std::optional<std::string> column;  // exactly one of column / value
  std::optional<std::string> value;
  std::string datatype = "xsd:string";
  std::string units;  // informational, e.g. "postnatal days"
};

struct NodeTemplate {
  std::string id;
  NodeKind kind = NodeKind::Entity;
  std::string iri;  // "prefix:local/{column}/..." or an absolute IRI
  std::vector<std::string> types;
  std::vector<AttributeTemplate> attributes;
  // The node is only instantiated for rows where these cells are non-blank
  // (IRI placeholders are always required).
  std::vector<std::string> requires_columns;
  std::string description;
};

struct EdgeTemplate {
  std::string from;
  Relation relation = Relation::WasGeneratedBy;
  std::string to;
};

struct ObjectModelSchema {
  std::string name;
  std::string description;
  std::vector<std::pair<std::string, std::string>> namespaces;
  std::vector<NodeTemplate> nodes;
  std::vector<EdgeTemplate> edges;

  const NodeTemplate* node(std::string_view id) const;
  rdf::PrefixMap prefix_map() const;
  // Every column named by a placeholder, attribute or requires list.
  std::set<std::string> columns() const;
};

class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

// Parses and validates; throws SchemaError listing every problem found.
ObjectModelSchema load_schema(std::string_view json_text);
ObjectModelSchema schema_from_json(const nlohmann::json& j);
nlohmann::json schema_to_json(const ObjectModelSchema& schema);

// Validation only; empty when the schema is well formed.
std::vector<std::string> validate(const ObjectModelSchema& schema);

std::string_view kind_name(NodeKind kind);
std::optional<NodeKind> parse_kind(std::string_view name);
std::string_view relation_name(Relation r);
std::optional<Relation> parse_relation(std::string_view name);
rdf::Term prov_class(NodeKind kind);
rdf::Term relation_predicate(Relation r);
bool relation_allowed(Relation r, NodeKind from, NodeKind to);

// Column names of the {placeholders} in an IRI template. Throws
// std::invalid_argument on unbalanced or empty braces.
std::vector<std::string> placeholders(std::string_view iri_template);

// Cell text to a literal of the given datatype IRI; nullopt if the lexical
// form is not valid for it. Surrounding whitespace is ignored.
std::optional<rdf::Term> coerce(std::string_view cell, const std::string& datatype_iri);

}  // namespace semdd::prov
