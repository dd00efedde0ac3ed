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

// Static catalogs served to the UI: term definitions for tooltips, query
// templates and the data types a subject can have.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "semdd/rdf/graph_store.hpp"

namespace semdd::service {

struct TermDefinition {
  std::string qname;
  std::string label;
  std::string definition;
  std::string source;
  friend bool operator==(const TermDefinition&, const TermDefinition&) = default;
};

inline constexpr std::string_view kSourceNcit = "NCI Thesaurus";
inline constexpr std::string_view kSourceProject = "cuci project vocabulary";
inline constexpr std::string_view kSourceProv = "W3C PROV-O";

class TermRegistry {
 public:
  // Throws std::invalid_argument if the qname's prefix is not in `prefixes`.
  void add(TermDefinition def, const rdf::PrefixMap& prefixes);
  const TermDefinition* find(std::string_view qname) const;
  std::vector<TermDefinition> list() const;
  std::size_t size() const { return terms_.size(); }

 private:
  std::map<std::string, TermDefinition, std::less<>> terms_;
};

TermRegistry default_terms(const rdf::PrefixMap& prefixes = rdf::PrefixMap::standard());

enum class SlotType { Iri, String, Integer, Decimal };

struct TemplateSlot {
  std::string name;
  SlotType type = SlotType::String;
  bool optional = true;
  std::string description;
};

// Placeholders are written {{name}}. A line holding the placeholder of an
// optional slot that was not supplied is dropped, so filters on absent
// parameters disappear from the text.
struct QueryTemplate {
  std::string id;
  std::string model;  // object-model (schema) name
  std::string title;
  std::vector<TemplateSlot> slots;
  std::string text;
  // Result variable -> qualified name of its definition.
  std::map<std::string, std::string> annotations;
};

class TemplateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Renders a parameter as a SPARQL term. Throws TemplateError for values that
// do not fit the slot type.
std::string render_slot(const TemplateSlot& slot, const nlohmann::json& value);

// Throws TemplateError for unknown parameters, missing required ones and
// badly typed values.
std::string instantiate(const QueryTemplate& tmpl, const nlohmann::json& params);

// Placeholders left in `text`.
std::vector<std::string> placeholders_in(std::string_view text);

const std::vector<QueryTemplate>& default_templates();
const QueryTemplate* find_template(std::string_view id);

// A data type is present for an agent when some activity associated with the
// agent generated an entity with `marker_predicate` (and, if set, the given
// object IRI).
struct DataType {
  std::string name;
  std::string description;
  std::string marker_predicate;  // qualified name
  std::string marker_object;     // qualified name or empty for "any"
  // Templates selection export runs, each filtered to one subject id.
  std::vector<std::string> templates;
};

const std::vector<DataType>& default_data_types();
const DataType* find_data_type(std::string_view name);

std::string slot_type_name(SlotType t);
nlohmann::json to_json(const TermDefinition& def);
nlohmann::json to_json(const QueryTemplate& tmpl);
nlohmann::json to_json(const DataType& dt);

}  // namespace semdd::service
