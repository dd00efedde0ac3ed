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

#include "semdd/prov/schema.hpp"

#include <map>

#include "semdd/rdf/vocab.hpp"

namespace semdd::prov {

using nlohmann::json;
using rdf::Term;

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
  std::string s = "invalid object-model schema:";
  for (const auto& e : errors) s += "\n  " + e;
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_absolute_iri(std::string_view s) { return s.find("://") != std::string_view::npos || s.starts_with("urn:"); }

// Reads an optional string member; records an error if present but not a
// string.
std::optional<std::string> string_member(const json& obj, const char* key, const std::string& where,
                                         std::vector<std::string>& errors) {
  if (!obj.contains(key)) return std::nullopt;
  if (!obj[key].is_string()) {
    errors.push_back(where + ": '" + key + "' must be a string");
    return std::nullopt;
  }
  return obj[key].get<std::string>();
}

std::vector<std::string> string_list(const json& obj, const char* key, const std::string& where,
                                     std::vector<std::string>& errors) {
  std::vector<std::string> out;
  if (!obj.contains(key)) return out;
  if (!obj[key].is_array()) {
    errors.push_back(where + ": '" + key + "' must be an array of strings");
    return out;
  }
  for (const auto& v : obj[key]) {
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else {
      errors.push_back(where + ": '" + key + "' must be an array of strings");
    }
  }
  return out;
}

}  // namespace

SchemaError::SchemaError(std::vector<std::string> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

const NodeTemplate* ObjectModelSchema::node(std::string_view id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

rdf::PrefixMap ObjectModelSchema::prefix_map() const {
  rdf::PrefixMap m;
  for (const auto& [prefix, ns] : namespaces) m.set(prefix, ns);
  return m;
}

std::set<std::string> ObjectModelSchema::columns() const {
  std::set<std::string> out;
  for (const auto& n : nodes) {
    try {
      for (auto& p : placeholders(n.iri)) out.insert(std::move(p));
    } catch (const std::invalid_argument&) {
    }
    for (const auto& a : n.attributes) {
      if (a.column) out.insert(*a.column);
    }
    out.insert(n.requires_columns.begin(), n.requires_columns.end());
  }
  return out;
}

std::string_view kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Entity: return "entity";
    case NodeKind::Activity: return "activity";
    case NodeKind::Agent: return "agent";
  }
  return "entity";
}

std::optional<NodeKind> parse_kind(std::string_view name) {
  if (name == "entity") return NodeKind::Entity;
  if (name == "activity") return NodeKind::Activity;
  if (name == "agent") return NodeKind::Agent;
  return std::nullopt;
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::WasGeneratedBy: return "wasGeneratedBy";
    case Relation::WasAssociatedWith: return "wasAssociatedWith";
    case Relation::Used: return "used";
    case Relation::WasAttributedTo: return "wasAttributedTo";
    case Relation::ActedOnBehalfOf: return "actedOnBehalfOf";
  }
  return "wasGeneratedBy";
}

std::optional<Relation> parse_relation(std::string_view name) {
  for (Relation r : {Relation::WasGeneratedBy, Relation::WasAssociatedWith, Relation::Used,
                     Relation::WasAttributedTo, Relation::ActedOnBehalfOf}) {
    if (relation_name(r) == name) return r;
  }
  return std::nullopt;
}

Term prov_class(NodeKind kind) {
  switch (kind) {
    case NodeKind::Entity: return Term::iri(vocab::prov("Entity"));
    case NodeKind::Activity: return Term::iri(vocab::prov("Activity"));
    case NodeKind::Agent: return Term::iri(vocab::prov("Agent"));
  }
  return Term::iri(vocab::prov("Entity"));
}

Term relation_predicate(Relation r) { return Term::iri(vocab::prov(std::string(relation_name(r)))); }

bool relation_allowed(Relation r, NodeKind from, NodeKind to) {
  switch (r) {
    case Relation::WasGeneratedBy: return from == NodeKind::Entity && to == NodeKind::Activity;
    case Relation::WasAssociatedWith: return from == NodeKind::Activity && to == NodeKind::Agent;
    case Relation::Used: return from == NodeKind::Activity && to == NodeKind::Entity;
    case Relation::WasAttributedTo: return from == NodeKind::Entity && to == NodeKind::Agent;
    case Relation::ActedOnBehalfOf: return from == NodeKind::Agent && to == NodeKind::Agent;
  }
  return false;
}

std::vector<std::string> placeholders(std::string_view tmpl) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    char c = tmpl[i];
    if (c == '}') throw std::invalid_argument("unbalanced '}' in template '" + std::string(tmpl) + "'");
    if (c != '{') {
      ++i;
      continue;
    }
    std::size_t close = tmpl.find_first_of("{}", i + 1);
    if (close == std::string_view::npos || tmpl[close] != '}') {
      throw std::invalid_argument("unbalanced '{' in template '" + std::string(tmpl) + "'");
    }
    if (close == i + 1) throw std::invalid_argument("empty placeholder in template '" + std::string(tmpl) + "'");
    out.emplace_back(tmpl.substr(i + 1, close - i - 1));
    i = close + 1;
  }
  return out;
}

std::optional<Term> coerce(std::string_view cell, const std::string& datatype) {
  std::string_view v = trim(cell);
  if (datatype == vocab::kXsdInteger) {
    if (!rdf::is_integer_lexical(v)) return std::nullopt;
    return Term::literal(std::string(v), datatype);
  }
  if (datatype == vocab::kXsdDecimal) {
    if (rdf::is_integer_lexical(v)) return Term::literal(std::string(v) + ".0", datatype);
    if (!rdf::is_decimal_lexical(v)) return std::nullopt;
    return Term::literal(std::string(v), datatype);
  }
  if (datatype == vocab::kXsdDouble) {
    if (!rdf::is_double_lexical(v) && !rdf::is_decimal_lexical(v) && !rdf::is_integer_lexical(v)) {
      return std::nullopt;
    }
    return Term::literal(std::string(v), datatype);
  }
  if (datatype == vocab::kXsdBoolean) {
    if (v == "true" || v == "1") return Term::boolean(true);
    if (v == "false" || v == "0") return Term::boolean(false);
    return std::nullopt;
  }
  return Term::literal(std::string(v), datatype);
}

std::vector<std::string> validate(const ObjectModelSchema& s) {
  std::vector<std::string> errors;
  if (s.name.empty()) errors.push_back("schema name is empty");
  rdf::PrefixMap prefixes = s.prefix_map();

  auto check_qname = [&](const std::string& qname, const std::string& where) -> std::optional<std::string> {
    if (is_absolute_iri(qname)) return qname;
    try {
      return prefixes.expand(qname);
    } catch (const std::exception&) {
      errors.push_back(where + ": '" + qname + "' does not resolve against the declared namespaces");
      return std::nullopt;
    }
  };

  std::map<std::string, int> seen;
  for (const auto& n : s.nodes) seen[n.id]++;
  for (const auto& [id, count] : seen) {
    if (count > 1) errors.push_back("duplicate node id '" + id + "' (declared " + std::to_string(count) + " times)");
  }

  for (const auto& n : s.nodes) {
    std::string where = "node '" + n.id + "'";
    if (n.id.empty()) errors.push_back("node with empty id");
    if (n.iri.empty()) {
      errors.push_back(where + ": empty IRI template");
    } else {
      try {
        placeholders(n.iri);
        if (!is_absolute_iri(n.iri)) {
          auto colon = n.iri.find(':');
          if (colon == std::string::npos || !prefixes.contains(std::string_view(n.iri).substr(0, colon))) {
            errors.push_back(where + ": IRI template '" + n.iri + "' does not start with a declared prefix");
          }
        }
      } catch (const std::invalid_argument& e) {
        errors.push_back(where + ": " + e.what());
      }
    }
    for (const auto& t : n.types) check_qname(t, where + " type");
    for (const auto& a : n.attributes) {
      std::string aw = where + " attribute " + a.predicate;
      check_qname(a.predicate, aw);
      auto dt = check_qname(a.datatype, aw + " datatype");
      if (a.column.has_value() == a.value.has_value()) {
        errors.push_back(aw + ": exactly one of 'column' and 'value' is required");
      } else if (a.value && dt && !coerce(*a.value, *dt)) {
        errors.push_back(aw + ": constant '" + *a.value + "' is not a valid " + a.datatype);
      }
    }
  }

  for (const auto& e : s.edges) {
    std::string where = "edge " + e.from + " " + std::string(relation_name(e.relation)) + " " + e.to;
    const NodeTemplate* from = s.node(e.from);
    const NodeTemplate* to = s.node(e.to);
    if (!from) errors.push_back(where + ": unknown node '" + e.from + "'");
    if (!to) errors.push_back(where + ": unknown node '" + e.to + "'");
    if (from && to && !relation_allowed(e.relation, from->kind, to->kind)) {
      errors.push_back(where + ": domain/range violation, " + std::string(kind_name(from->kind)) + " -> " +
                       std::string(kind_name(to->kind)) + " is not allowed");
    }
  }
  return errors;
}

ObjectModelSchema schema_from_json(const json& j) {
  std::vector<std::string> errors;
  ObjectModelSchema s;
  if (!j.is_object()) throw SchemaError({"schema document must be a JSON object"});

  s.name = string_member(j, "name", "schema", errors).value_or("");
  s.description = string_member(j, "description", "schema", errors).value_or("");

  if (j.contains("namespaces")) {
    if (!j["namespaces"].is_object()) {
      errors.push_back("schema: 'namespaces' must be an object of prefix -> IRI");
    } else {
      for (const auto& [prefix, ns] : j["namespaces"].items()) {
        if (ns.is_string()) {
          s.namespaces.emplace_back(prefix, ns.get<std::string>());
        } else {
          errors.push_back("namespace '" + prefix + "' must map to a string");
        }
      }
    }
  }

  if (!j.contains("nodes") || !j["nodes"].is_array()) {
    errors.push_back("schema: 'nodes' array is required");
  } else {
    std::size_t index = 0;
    for (const auto& jn : j["nodes"]) {
      std::string where = "nodes[" + std::to_string(index++) + "]";
      if (!jn.is_object()) {
        errors.push_back(where + ": must be an object");
        continue;
      }
      NodeTemplate n;
      n.id = string_member(jn, "id", where, errors).value_or("");
      if (!n.id.empty()) where = "node '" + n.id + "'";
      auto kind = string_member(jn, "kind", where, errors);
      if (!kind) {
        errors.push_back(where + ": 'kind' is required");
      } else if (auto k = parse_kind(*kind)) {
        n.kind = *k;
      } else {
        errors.push_back(where + ": unknown kind '" + *kind + "' (expected entity, activity or agent)");
      }
      n.iri = string_member(jn, "iri", where, errors).value_or("");
      n.types = string_list(jn, "types", where, errors);
      n.requires_columns = string_list(jn, "requires", where, errors);
      n.description = string_member(jn, "description", where, errors).value_or("");
      if (jn.contains("attributes")) {
        if (!jn["attributes"].is_array()) {
          errors.push_back(where + ": 'attributes' must be an array");
        } else {
          for (const auto& ja : jn["attributes"]) {
            if (!ja.is_object()) {
              errors.push_back(where + ": attribute must be an object");
              continue;
            }
            AttributeTemplate a;
            a.predicate = string_member(ja, "predicate", where, errors).value_or("");
            if (a.predicate.empty()) errors.push_back(where + ": attribute without 'predicate'");
            a.column = string_member(ja, "column", where, errors);
            a.value = string_member(ja, "value", where, errors);
            a.datatype = string_member(ja, "datatype", where, errors).value_or("xsd:string");
            a.units = string_member(ja, "units", where, errors).value_or("");
            n.attributes.push_back(std::move(a));
          }
        }
      }
      s.nodes.push_back(std::move(n));
    }
  }

  if (j.contains("edges")) {
    if (!j["edges"].is_array()) {
      errors.push_back("schema: 'edges' must be an array");
    } else {
      std::size_t index = 0;
      for (const auto& je : j["edges"]) {
        std::string where = "edges[" + std::to_string(index++) + "]";
        if (!je.is_object()) {
          errors.push_back(where + ": must be an object");
          continue;
        }
        EdgeTemplate e;
        e.from = string_member(je, "from", where, errors).value_or("");
        e.to = string_member(je, "to", where, errors).value_or("");
        auto rel = string_member(je, "relation", where, errors).value_or("");
        if (auto r = parse_relation(rel)) {
          e.relation = *r;
          s.edges.push_back(std::move(e));
        } else {
          errors.push_back(where + ": unknown relation '" + rel + "'");
        }
      }
    }
  }

  auto more = validate(s);
  errors.insert(errors.end(), more.begin(), more.end());
  if (!errors.empty()) throw SchemaError(std::move(errors));
  return s;
}

ObjectModelSchema load_schema(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError({std::string("schema is not valid JSON: ") + e.what()});
  }
  return schema_from_json(j);
}

json schema_to_json(const ObjectModelSchema& s) {
  json j;
  j["name"] = s.name;
  if (!s.description.empty()) j["description"] = s.description;
  j["namespaces"] = json::object();
  for (const auto& [prefix, ns] : s.namespaces) j["namespaces"][prefix] = ns;
  j["nodes"] = json::array();
  for (const auto& n : s.nodes) {
    json jn{{"id", n.id}, {"kind", kind_name(n.kind)}, {"iri", n.iri}};
    if (!n.description.empty()) jn["description"] = n.description;
    if (!n.types.empty()) jn["types"] = n.types;
    if (!n.requires_columns.empty()) jn["requires"] = n.requires_columns;
    json attrs = json::array();
    for (const auto& a : n.attributes) {
      json ja{{"predicate", a.predicate}, {"datatype", a.datatype}};
      if (a.column) ja["column"] = *a.column;
      if (a.value) ja["value"] = *a.value;
      if (!a.units.empty()) ja["units"] = a.units;
      attrs.push_back(std::move(ja));
    }
    jn["attributes"] = std::move(attrs);
    j["nodes"].push_back(std::move(jn));
  }
  j["edges"] = json::array();
  for (const auto& e : s.edges) {
    j["edges"].push_back({{"from", e.from}, {"relation", relation_name(e.relation)}, {"to", e.to}});
  }
  return j;
}

}  // namespace semdd::prov
