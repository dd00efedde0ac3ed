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

#include "semdd/prov/transform.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "semdd/rdf/vocab.hpp"

namespace semdd::prov {

using rdf::Term;
using rdf::Triple;

TransformError::TransformError(std::size_t row, std::string column, std::string value,
                               const std::string& datatype)
    : std::runtime_error("row " + std::to_string(row) + ", column '" + column + "': '" + value +
                         "' is not a valid " + datatype),
      row_(row),
      column_(std::move(column)),
      value_(std::move(value)) {}

namespace {

std::string describe_missing(const std::vector<std::string>& missing) {
  std::string s = "table is missing columns required by the schema:";
  for (const auto& m : missing) s += " " + m;
  return s;
}

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

struct CompiledAttribute {
  Term predicate;
  std::optional<std::size_t> column;
  std::optional<Term> constant;
  std::string datatype;  // full IRI
  std::string datatype_name;
};

struct CompiledNode {
  const NodeTemplate* node;
  // IRI template split into literal text and column references.
  std::vector<std::string> pieces;
  std::vector<std::optional<std::size_t>> refs;
  std::vector<std::size_t> required;
  std::vector<Term> types;
  std::vector<CompiledAttribute> attributes;
};

std::string expand(const rdf::PrefixMap& prefixes, const std::string& qname) {
  if (qname.find("://") != std::string::npos || qname.starts_with("urn:")) return qname;
  return prefixes.expand(qname);
}

}  // namespace

ColumnMismatch::ColumnMismatch(std::vector<std::string> missing)
    : std::runtime_error(describe_missing(missing)), missing_(std::move(missing)) {}

std::string percent_encode(std::string_view s) {
  static const char* kHex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
                      c == '.' || c == '_' || c == '~';
    if (unreserved) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    }
  }
  return out;
}

std::vector<Triple> transform(const SourceTable& table, const ObjectModelSchema& schema) {
  if (auto errors = validate(schema); !errors.empty()) throw SchemaError(std::move(errors));
  std::vector<std::string> missing;
  for (const auto& col : schema.columns()) {
    if (!table.column(col)) missing.push_back(col);
  }
  if (!missing.empty()) throw ColumnMismatch(std::move(missing));

  rdf::PrefixMap prefixes = schema.prefix_map();
  std::vector<CompiledNode> nodes;
  std::map<std::string, std::size_t> node_index;
  for (const auto& n : schema.nodes) {
    CompiledNode c;
    c.node = &n;
    // Resolve the prefix of a "prefix:..." template once.
    std::string tmpl = n.iri;
    if (!(tmpl.find("://") != std::string::npos || tmpl.starts_with("urn:"))) {
      auto colon = tmpl.find(':');
      tmpl = std::string(*prefixes.find(std::string_view(tmpl).substr(0, colon))) + tmpl.substr(colon + 1);
    }
    std::size_t i = 0;
    while (i < tmpl.size()) {
      auto open = tmpl.find('{', i);
      if (open == std::string::npos) {
        c.pieces.push_back(tmpl.substr(i));
        c.refs.push_back(std::nullopt);
        break;
      }
      if (open > i) {
        c.pieces.push_back(tmpl.substr(i, open - i));
        c.refs.push_back(std::nullopt);
      }
      auto close = tmpl.find('}', open);
      std::size_t col = *table.column(tmpl.substr(open + 1, close - open - 1));
      c.pieces.emplace_back();
      c.refs.push_back(col);
      c.required.push_back(col);
      i = close + 1;
    }
    for (const auto& r : n.requires_columns) c.required.push_back(*table.column(r));
    c.types.push_back(prov_class(n.kind));
    for (const auto& t : n.types) c.types.push_back(Term::iri(expand(prefixes, t)));
    for (const auto& a : n.attributes) {
      CompiledAttribute ca;
      ca.predicate = Term::iri(expand(prefixes, a.predicate));
      ca.datatype = expand(prefixes, a.datatype);
      ca.datatype_name = a.datatype;
      if (a.column) {
        ca.column = *table.column(*a.column);
      } else {
        ca.constant = coerce(*a.value, ca.datatype);
      }
      c.attributes.push_back(std::move(ca));
    }
    node_index.emplace(n.id, nodes.size());
    nodes.push_back(std::move(c));
  }

  const Term rdf_type = Term::iri(vocab::kRdfType);
  std::vector<Triple> out;
  std::vector<std::optional<Term>> instance(nodes.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const auto& c = nodes[k];
      instance[k].reset();
      bool present = std::none_of(c.required.begin(), c.required.end(),
                                  [&](std::size_t col) { return blank(row[col]); });
      if (!present) continue;
      std::string iri;
      for (std::size_t p = 0; p < c.pieces.size(); ++p) {
        iri += c.refs[p] ? percent_encode(row[*c.refs[p]]) : c.pieces[p];
      }
      Term subject = Term::iri(std::move(iri));
      for (const auto& t : c.types) out.push_back({subject, rdf_type, t});
      for (const auto& a : c.attributes) {
        if (a.constant) {
          out.push_back({subject, a.predicate, *a.constant});
          continue;
        }
        const std::string& cell = row[*a.column];
        if (blank(cell)) continue;
        auto lit = coerce(cell, a.datatype);
        if (!lit) throw TransformError(r + 1, table.header[*a.column], cell, a.datatype_name);
        out.push_back({subject, a.predicate, std::move(*lit)});
      }
      instance[k] = std::move(subject);
    }
    for (const auto& e : schema.edges) {
      const auto& from = instance[node_index.at(e.from)];
      const auto& to = instance[node_index.at(e.to)];
      if (from && to) out.push_back({*from, relation_predicate(e.relation), *to});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace semdd::prov
